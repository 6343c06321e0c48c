#include "cactus/realgeometry/star.hpp"

#include <algorithm>
#include <sstream>

#include "cactus/errors.hpp"

namespace cactus::real {

using forests::Clade;

StarPoint::StarPoint(std::vector<int> o, std::vector<Rational> d) : order(std::move(o)), diff(std::move(d)) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) throw DomainError("star point order must be a permutation of 1..n");
  }
  if (order.empty() || diff.size() + 1 != order.size()) throw DomainError("star point needs n-1 differences");
  for (auto& q : diff) {
    q.canonicalize();
    if (q < 0 || q > 1) throw DomainError("star point differences must lie in [0,1]");
  }
}

StarPoint StarPoint::star_point(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k + 1;
  return StarPoint(order, std::vector<Rational>(static_cast<std::size_t>(n - 1), Rational(1)));
}

bool StarPoint::is_interior() const {
  return std::all_of(diff.begin(), diff.end(), [](const Rational& q) { return q < 1; });
}

std::vector<Rational> StarPoint::positions() const {
  std::vector<Rational> x(order.size() + 1, Rational(0));
  Rational cur = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) cur -= diff[k - 1];
    x[static_cast<std::size_t>(order[k])] = cur;
  }
  return x;
}

bool StarPoint::same_point(const StarPoint& other) const {
  if (n() != other.n()) return false;
  auto a = positions(), b = other.positions();
  Rational shift = a[1] - b[1];
  for (std::size_t l = 1; l < a.size(); ++l) {
    if (a[l] - b[l] != shift) return false;
  }
  return true;
}

StarPoint StarPoint::act(const std::vector<int>& w) const {
  if (w.size() != order.size()) throw DomainError("permutation size does not match the star point");
  std::vector<int> o;
  for (int l : order) o.push_back(w[static_cast<std::size_t>(l - 1)]);
  return StarPoint(o, diff);
}

StarClass star_equivalence_class(const StarPoint& x) {
  std::vector<int> cls(static_cast<std::size_t>(x.n()) + 1, 0);
  int c = 0;
  for (std::size_t k = 0; k < x.order.size(); ++k) {
    if (k > 0 && x.diff[k - 1] == 1) ++c;
    cls[static_cast<std::size_t>(x.order[k])] = c;
  }
  std::vector<int> ground, class_of;
  for (int l = 1; l <= x.n(); ++l) {
    ground.push_back(l);
    class_of.push_back(cls[static_cast<std::size_t>(l)]);
  }
  StarClass out{comb::SetPartition::from_classes(ground, class_of), {}};
  auto pos = x.positions();
  for (const auto& block : out.S.blocks()) {
    int lo = *std::min_element(block.begin(), block.end());
    for (int l : block) out.reduced[l] = pos[static_cast<std::size_t>(l)] - pos[static_cast<std::size_t>(lo)];
  }
  return out;
}

bool star_related(const StarPoint& a, const StarPoint& b) {
  if (a.n() != b.n()) return false;
  auto ca = star_equivalence_class(a), cb = star_equivalence_class(b);
  return ca.S == cb.S && ca.reduced == cb.reduced;
}

CubePoint::CubePoint(forests::PlanarForest f, std::map<Clade, Rational> values) : tau(std::move(f)), t(std::move(values)) {
  std::set<Clade> edges;
  for (int id : tau.internal_vertices()) edges.insert(tau.clade(id));
  if (edges.size() != t.size()) throw DomainError("cube point needs one value per internal edge");
  for (auto& [c, q] : t) {
    if (!edges.count(c)) throw DomainError("cube point value on an edge that is not in the forest");
    q.canonicalize();
    if (q < 0 || q > 1) throw DomainError("cube point values must lie in [0,1]");
  }
}

const Rational& CubePoint::at(int vertex) const { return t.at(tau.clade(vertex)); }

Rational CubePoint::a(int vertex) const {
  Rational prod = 1;
  for (int v = vertex; v >= 0; v = tau.vertex(v).parent) prod *= at(v);
  return prod;
}

StarPoint gamma(const CubePoint& p) {
  auto order = p.tau.leaf_order();
  std::vector<Rational> diff;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    auto m = p.tau.meet(order[k], order[k + 1]);
    diff.push_back(m ? p.a(*m) : Rational(1));
  }
  return StarPoint(order, diff);
}

Delta theta_star(const StarPoint& x, const RationalDiffeo& f, ThetaSign sign) {
  Delta out;
  std::size_t n = x.order.size();
  for (std::size_t a = 0; a < n; ++a) {
    ExtReal sum(0);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational& d = x.diff[b - 1];
      sum = sum + (sign == ThetaSign::Chart ? f(d) : f(Rational(-d)));
      out[{x.order[a], x.order[b]}] = sum;
      out[{x.order[b], x.order[a]}] = -sum;
    }
  }
  return out;
}

proj::Tuple flower_tuple(const std::vector<int>& labels, const Delta& delta) {
  proj::Tuple t;
  t.labels = labels;
  std::sort(t.labels.begin(), t.labels.end());
  for (auto [i, j] : proj::ordered_pairs(t.labels)) t.nu[{i, j}] = delta.at({i, j}).to_projective().inverse();
  return t;
}

namespace {

std::string clade_key(Clade c) {
  std::string out;
  for (int l = 0; l < 64; ++l) {
    if (c & (Clade{1} << l)) out += (out.empty() ? "" : ",") + std::to_string(l);
  }
  return out;
}

Clade parse_clade(const std::string& key) {
  Clade c = 0;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int l = 0;
    try {
      l = std::stoi(part);
    } catch (const std::exception&) {
      throw DomainError("malformed edge key '" + key + "'");
    }
    if (l < 1 || l > 63) throw DomainError("edge key label out of range in '" + key + "'");
    c |= Clade{1} << l;
  }
  return c;
}

std::string text_of(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

nlohmann::json star_to_json(const StarPoint& x) {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& q : x.diff) d.push_back(cactus::to_string(q));
  return {{"order", x.order}, {"diff", d}};
}

StarPoint star_from_json(const nlohmann::json& j) {
  std::vector<Rational> d;
  for (const auto& v : j.at("diff")) d.push_back(parse_rational(text_of(v)));
  return StarPoint(j.at("order").get<std::vector<int>>(), d);
}

nlohmann::json cube_to_json(const CubePoint& p) {
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [c, q] : p.t) t[clade_key(c)] = cactus::to_string(q);
  return {{"forest", p.tau.to_string()}, {"t", t}};
}

CubePoint cube_from_json(const nlohmann::json& j) {
  auto f = forests::PlanarForest::parse(j.at("forest").get<std::string>());
  std::map<Clade, Rational> t;
  if (j.contains("t")) {
    for (const auto& [key, val] : j["t"].items()) t[parse_clade(key)] = parse_rational(text_of(val));
  }
  return CubePoint(f, t);
}

}  // namespace cactus::real
