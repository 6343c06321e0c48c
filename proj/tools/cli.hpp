#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cactus/cli/batches.hpp"
#include "json.hpp"

namespace cactus::cli {

// Bad flag values or unreadable input; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format;  // json, csv or dot; empty selects the command default
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;
  int exit_code = 0;

  // The requested format, checked against the ones the command supports.
  std::string format_or(const std::string& fallback, std::initializer_list<const char*> allowed) const;
  void emit(const std::string& text) const;
  void emit(const nlohmann::json& j) const;
  void fail() { exit_code = 1; }
};

nlohmann::json read_json(const std::string& path);
// JSON (one object, or an array for several results) or CSV rows; a failed
// result sets exit code 1.
void emit_results(Context& ctx, const std::vector<BatchResult>& results);

void add_enumerate(CLI::App& app, Context& ctx);
void add_verify(CLI::App& app, Context& ctx);
void add_map(CLI::App& app, Context& ctx);
void add_classify(CLI::App& app, Context& ctx);
void add_path(CLI::App& app, Context& ctx);
void add_roots(CLI::App& app, Context& ctx);
void add_export(CLI::App& app, Context& ctx);

}  // namespace cactus::cli
