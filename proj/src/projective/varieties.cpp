#include "cactus/projective/varieties.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "cactus/errors.hpp"

namespace cactus::proj {

Variety parse_variety(const std::string& name) {
  static const std::map<std::string, Variety> names = {
      {"T", Variety::LosevManin},           {"LosevManin", Variety::LosevManin},
      {"f", Variety::Flower},               {"Flower", Variety::Flower},
      {"Cf", Variety::DeformedFlower},      {"DeformedFlower", Variety::DeformedFlower},
      {"M", Variety::DeligneMumford},       {"DeligneMumford", Variety::DeligneMumford},
      {"Q", Variety::MauWoodward},          {"MauWoodward", Variety::MauWoodward},
      {"CQ", Variety::DeformedMauWoodward}, {"DeformedMauWoodward", Variety::DeformedMauWoodward},
  };
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown variety '" + name + "'");
  return it->second;
}

std::string variety_name(Variety v) {
  switch (v) {
    case Variety::LosevManin: return "LosevManin";
    case Variety::Flower: return "Flower";
    case Variety::DeformedFlower: return "DeformedFlower";
    case Variety::DeligneMumford: return "DeligneMumford";
    case Variety::MauWoodward: return "MauWoodward";
    case Variety::DeformedMauWoodward: return "DeformedMauWoodward";
  }
  return "?";
}

bool has_pairs(Variety v) { return v != Variety::DeligneMumford; }

bool has_triples(Variety v) {
  return v == Variety::DeligneMumford || v == Variety::MauWoodward || v == Variety::DeformedMauWoodward;
}

bool is_deformed(Variety v) { return v == Variety::DeformedFlower || v == Variety::DeformedMauWoodward; }

namespace {

std::string pair_name(const std::string& sym, int i, int j) {
  return sym + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string triple_name(int i, int j, int k) {
  return "mu[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

}  // namespace

const ProjPoint& Tuple::pair(int i, int j) const {
  auto it = nu.find({i, j});
  if (it == nu.end()) throw DomainError("missing coordinate " + pair_name("nu", i, j));
  return it->second;
}

const ProjPoint& Tuple::triple(int i, int j, int k) const {
  auto it = mu.find({i, j, k});
  if (it == mu.end()) throw DomainError("missing coordinate " + triple_name(i, j, k));
  return it->second;
}

Tuple Tuple::conj() const {
  Tuple out = *this;
  if (eps) out.eps = eps->conj();
  for (auto& [k, p] : out.nu) p = p.conj();
  for (auto& [k, p] : out.mu) p = p.conj();
  return out;
}

std::vector<int> iota_labels(int n) {
  std::vector<int> out(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

std::vector<Pair> ordered_pairs(const std::vector<int>& labels) {
  std::vector<Pair> out;
  for (int i : labels) {
    for (int j : labels) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Triple> ordered_triples(const std::vector<int>& labels) {
  std::vector<Triple> out;
  for (int i : labels) {
    for (int j : labels) {
      for (int k : labels) {
        if (i != j && j != k && i != k) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

void complete_pairs(Tuple& t, Variety v) {
  Scalar e = t.epsilon();
  for (auto [i, j] : ordered_pairs(t.labels)) {
    if (i > j || t.nu.count({j, i})) continue;
    const ProjPoint& p = t.pair(i, j);
    if (v == Variety::LosevManin) {
      t.nu[{j, i}] = p.inverse();
    } else {
      t.nu[{j, i}] = affine(p, Scalar(-1), e);
    }
  }
}

void complete_triples(Tuple& t) {
  for (const auto& tr : ordered_triples(t.labels)) {
    auto [i, j, k] = tr;
    if (!(i < j && j < k)) continue;
    const ProjPoint& a = t.triple(i, j, k);
    const Scalar &u = a.u(), &v = a.v();
    auto put = [&](int x, int y, int z, const Scalar& p, const Scalar& q) {
      if (!t.mu.count({x, y, z})) t.mu[{x, y, z}] = ProjPoint(p, q);
    };
    put(i, k, j, v, u);
    put(j, i, k, v - u, v);
    put(j, k, i, v, v - u);
    put(k, i, j, u - v, u);
    put(k, j, i, u, u - v);
  }
}

Tuple from_delta(const std::vector<int>& labels, const std::map<Pair, ProjPoint>& delta_upper,
                 std::optional<Scalar> eps) {
  Tuple t;
  t.labels = labels;
  std::sort(t.labels.begin(), t.labels.end());
  t.eps = eps;
  for (const auto& [ij, d] : delta_upper) {
    if (ij.first >= ij.second) throw DomainError("from_delta expects pairs with i < j");
    t.nu[ij] = d.inverse();
  }
  complete_pairs(t, eps ? Variety::DeformedFlower : Variety::Flower);
  return t;
}

std::string MembershipReport::witness() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) out << "; ";
    out << violations[k].text;
  }
  return out.str();
}

namespace {

struct Checker {
  MembershipReport report;
  void expect(bool zero, const std::string& equation, std::vector<int> idx, const std::string& text) {
    ++report.checked;
    if (zero) return;
    report.ok = false;
    report.violations.push_back({equation, std::move(idx), text});
  }
};

void require_index_sets(Variety v, const Tuple& t) {
  if (!std::is_sorted(t.labels.begin(), t.labels.end()) ||
      std::adjacent_find(t.labels.begin(), t.labels.end()) != t.labels.end()) {
    throw DomainError("labels must be sorted and distinct");
  }
  if (is_deformed(v) != t.eps.has_value()) {
    throw DomainError(variety_name(v) + (is_deformed(v) ? " needs epsilon" : " takes no epsilon"));
  }
  if (has_pairs(v)) {
    for (auto [i, j] : ordered_pairs(t.labels)) t.pair(i, j);
    if (t.nu.size() != ordered_pairs(t.labels).size()) throw DomainError("pair coordinates outside the label set");
  } else if (!t.nu.empty()) {
    throw DomainError(variety_name(v) + " has no pair coordinates");
  }
  if (has_triples(v)) {
    for (const auto& tr : ordered_triples(t.labels)) t.triple(tr[0], tr[1], tr[2]);
    if (t.mu.size() != ordered_triples(t.labels).size()) throw DomainError("triple coordinates outside the label set");
  } else if (!t.mu.empty()) {
    throw DomainError(variety_name(v) + " has no triple coordinates");
  }
}

// a b = c, homogenised as a1 b1 c2 = c1 a2 b2.
bool product_rule(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return a.u() * b.u() * c.v() == c.u() * a.v() * b.v();
}

void losev_manin(Checker& ck, const Tuple& t) {
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    const auto &a = t.pair(i, j), &b = t.pair(j, k), &c = t.pair(i, k);
    ck.expect(product_rule(a, b, c), "product", {i, j, k},
              pair_name("alpha", i, j) + "*" + pair_name("alpha", j, k) + " = " + pair_name("alpha", i, k));
  }
  for (auto [i, j] : ordered_pairs(t.labels)) {
    if (i > j) continue;
    const auto &a = t.pair(i, j), &d = t.pair(j, i);
    ck.expect(a.u() * d.u() == a.v() * d.v(), "inverse", {i, j},
              pair_name("alpha", i, j) + "*" + pair_name("alpha", j, i) + " = 1");
  }
}

// eps nu_ik + nu_ij nu_jk = nu_ik nu_jk + nu_ij nu_ik and nu_ij + nu_ji = eps.
void flower(Checker& ck, const Tuple& t) {
  Scalar e = t.epsilon();
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    const auto &a = t.pair(i, j), &b = t.pair(j, k), &c = t.pair(i, k);
    Scalar lhs = e * c.u() * a.v() * b.v() + a.u() * b.u() * c.v();
    Scalar rhs = c.u() * b.u() * a.v() + a.u() * c.u() * b.v();
    std::string text = pair_name("nu", i, j) + "*" + pair_name("nu", j, k) + " = " + pair_name("nu", i, k) + "*" +
                       pair_name("nu", j, k) + " + " + pair_name("nu", i, j) + "*" + pair_name("nu", i, k);
    if (!e.is_zero()) text = "eps*" + pair_name("nu", i, k) + " + " + text;
    ck.expect(lhs == rhs, "triangle", {i, j, k}, text);
  }
  for (auto [i, j] : ordered_pairs(t.labels)) {
    if (i > j) continue;
    const auto &a = t.pair(i, j), &d = t.pair(j, i);
    ck.expect(a.u() * d.v() + d.u() * a.v() == e * a.v() * d.v(), "antisymmetry", {i, j},
              pair_name("nu", i, j) + " + " + pair_name("nu", j, i) + " = " + (e.is_zero() ? "0" : "eps"));
  }
}

void deligne_mumford(Checker& ck, const Tuple& t) {
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    const auto &a = t.triple(i, j, k), &b = t.triple(i, k, j), &c = t.triple(j, i, k);
    ck.expect(a.u() * b.u() == a.v() * b.v(), "inverse", {i, j, k},
              triple_name(i, j, k) + "*" + triple_name(i, k, j) + " = 1");
    ck.expect(a.u() * c.v() + c.u() * a.v() == a.v() * c.v(), "complement", {i, j, k},
              triple_name(i, j, k) + " + " + triple_name(j, i, k) + " = 1");
  }
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    for (int l : t.labels) {
      if (l == i || l == j || l == k) continue;
      ck.expect(product_rule(t.triple(i, j, k), t.triple(i, l, j), t.triple(i, l, k)), "cocycle", {i, j, k, l},
                triple_name(i, j, k) + "*" + triple_name(i, l, j) + " = " + triple_name(i, l, k));
    }
  }
}

void mixed(Checker& ck, const Tuple& t) {
  for (const auto& [i, j, k] : ordered_triples(t.labels)) {
    ck.expect(product_rule(t.triple(i, j, k), t.pair(i, k), t.pair(i, j)), "ratio", {i, j, k},
              triple_name(i, j, k) + "*" + pair_name("nu", i, k) + " = " + pair_name("nu", i, j));
  }
}

}  // namespace

MembershipReport check_membership(Variety v, const Tuple& t) {
  require_index_sets(v, t);
  Checker ck;
  switch (v) {
    case Variety::LosevManin: losev_manin(ck, t); break;
    case Variety::Flower:
    case Variety::DeformedFlower: flower(ck, t); break;
    case Variety::DeligneMumford: deligne_mumford(ck, t); break;
    case Variety::MauWoodward:
    case Variety::DeformedMauWoodward:
      deligne_mumford(ck, t);
      mixed(ck, t);
      flower(ck, t);
      break;
  }
  auto& vs = ck.report.violations;
  std::stable_sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.equation, a.indices) < std::tie(b.equation, b.indices);
  });
  return ck.report;
}

namespace {

nlohmann::json point_json(const ProjPoint& p) { return {p.u().to_string(), p.v().to_string()}; }

ProjPoint point_from(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw DomainError("a projective point needs two coordinates");
    return ProjPoint(Scalar::parse(j[0].get<std::string>()), Scalar::parse(j[1].get<std::string>()));
  }
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s == "inf") return ProjPoint::infinity();
  return ProjPoint::finite(Scalar::parse(s));
}

std::vector<int> parse_key(const std::string& key, std::size_t arity) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw DomainError("malformed index key '" + key + "'");
    }
  }
  if (out.size() != arity) throw DomainError("index key '" + key + "' has the wrong arity");
  return out;
}

}  // namespace

nlohmann::json to_json(const Tuple& t) {
  nlohmann::json j;
  j["n"] = t.n();
  j["labels"] = t.labels;
  if (t.eps) j["epsilon"] = t.eps->to_string();
  nlohmann::json nu = nlohmann::json::object(), mu = nlohmann::json::object();
  for (const auto& [ij, p] : t.nu) nu[std::to_string(ij.first) + "," + std::to_string(ij.second)] = point_json(p);
  for (const auto& [ijk, p] : t.mu) {
    mu[std::to_string(ijk[0]) + "," + std::to_string(ijk[1]) + "," + std::to_string(ijk[2])] = point_json(p);
  }
  if (!t.nu.empty()) j["nu"] = nu;
  if (!t.mu.empty()) j["mu"] = mu;
  return j;
}

Tuple tuple_from_json(const nlohmann::json& j) {
  Tuple t;
  if (j.contains("labels")) {
    t.labels = j["labels"].get<std::vector<int>>();
  } else {
    t.labels = iota_labels(j.at("n").get<int>());
  }
  std::sort(t.labels.begin(), t.labels.end());
  if (j.contains("epsilon")) {
    const auto& e = j["epsilon"];
    t.eps = Scalar::parse(e.is_string() ? e.get<std::string>() : e.dump());
  }
  if (j.contains("nu")) {
    for (const auto& [key, val] : j["nu"].items()) {
      auto idx = parse_key(key, 2);
      t.nu[{idx[0], idx[1]}] = point_from(val);
    }
  }
  if (j.contains("mu")) {
    for (const auto& [key, val] : j["mu"].items()) {
      auto idx = parse_key(key, 3);
      t.mu[{idx[0], idx[1], idx[2]}] = point_from(val);
    }
  }
  return t;
}

}  // namespace cactus::proj
