#include <fstream>
#include <iostream>

#include "cactus/errors.hpp"
#include "cli.hpp"

namespace cactus::cli {

std::string Context::format_or(const std::string& fallback, std::initializer_list<const char*> allowed) const {
  std::string f = format.empty() ? fallback : format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not supported by this command");
}

void Context::emit(const std::string& text) const {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << body;
}

void Context::emit(const nlohmann::json& j) const { emit(j.dump()); }

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit_results(Context& ctx, const std::vector<BatchResult>& results) {
  for (const auto& r : results) {
    if (!r.ok) ctx.fail();
  }
  if (ctx.format_or("json", {"json", "csv"}) == "csv") {
    std::string text = "check,ok,checked,witness\n";
    for (const auto& r : results) {
      std::string w = r.witness;
      for (auto& c : w) {
        if (c == '"') c = '\'';
      }
      text += r.name + "," + (r.ok ? "true" : "false") + "," + std::to_string(r.checked) + ",\"" + w + "\"\n";
    }
    ctx.emit(text);
    return;
  }
  if (results.size() == 1) {
    ctx.emit(results[0].to_json());
    return;
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) j.push_back(r.to_json());
  ctx.emit(j);
}

}  // namespace cactus::cli

int main(int argc, char** argv) {
  using namespace cactus::cli;
  CLI::App app{"Combinatorics, geometry and groups of cactus flower spaces"};
  app.name("cactus");
  app.fallthrough();
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--out", ctx.out, "Write output to a file instead of stdout");
  app.add_option("--seed", ctx.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", ctx.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();

  add_enumerate(app, ctx);
  add_verify(app, ctx);
  add_map(app, ctx);
  add_classify(app, ctx);
  add_path(app, ctx);
  add_roots(app, ctx);
  add_export(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cactus::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return ctx.exit_code;
}
