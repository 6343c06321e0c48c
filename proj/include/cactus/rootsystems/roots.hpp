#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cactus/rational.hpp"
#include "cactus/realgeometry/extreal.hpp"
#include "json.hpp"

namespace cactus::roots {

// A vector of h*_R in the fundamental-weight basis of the base system.
using Vec = std::vector<Rational>;

// Finite crystallographic root system built from a Cartan matrix with
// cartan[i][j] = <alpha_i^vee, alpha_j>.
class RootSystem {
public:
  explicit RootSystem(std::vector<std::vector<int>> cartan, std::string name = "");

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  // Coordinates in the base simple roots; positive roots come first, sorted.
  const std::vector<int>& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
  const Vec& weight(int idx) const { return weights_[static_cast<std::size_t>(idx)]; }
  int index_of(const std::vector<int>& coords) const;
  int index_of_weight(const Vec& w) const;
  int negative(int idx) const { return neg_[static_cast<std::size_t>(idx)]; }
  // s_i applied to root idx, for the base simple reflection i.
  int reflect_root(int i, int idx) const { return reflect_[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)]; }

  // Invariant form, normalised by (alpha_i, alpha_i) = 2 d_i.
  Rational form(const Vec& a, const Vec& b) const;
  // <alpha^vee, lambda> = 2 (alpha, lambda) / (alpha, alpha).
  Rational pairing(int idx, const Vec& lambda) const;
  Vec reflect(int idx, const Vec& lambda) const;
  Vec to_root_coords(const Vec& lambda) const;

private:
  std::string name_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> d_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<std::vector<int>> roots_;
  std::vector<Vec> weights_;
  std::vector<int> neg_;
  std::vector<std::vector<int>> reflect_;
};

// Throws DomainError for matrices that are not Cartan matrices of finite type.
RootSystem build_root_system(const std::vector<std::vector<int>>& cartan, const std::string& name = "");
// "A3", "B2", "C3", "D4", "F4", "G2" (Bourbaki numbering).
std::vector<std::vector<int>> cartan_matrix(const std::string& type);
RootSystem root_system(const std::string& type);
// A type string or a matrix.
RootSystem root_system_from_json(const nlohmann::json& j);

// An ordered simple system Pi = w(base) with its fundamental weights, Weyl
// vector rho_Pi and positive system Phi_Pi.
struct SimpleSystem {
  std::vector<int> roots;
  std::vector<Vec> fundamental;
  Vec rho;
  std::vector<int> positive;
};

SimpleSystem make_simple_system(const RootSystem& rs, std::vector<int> roots);
SimpleSystem base_system(const RootSystem& rs);
// All simple systems, sorted lexicographically by their root indices.
std::vector<SimpleSystem> simple_systems(const RootSystem& rs);

// The face F^Delta_Pi of P; delta is a bitmask over the positions of Pi.
struct FaceDatum {
  int system = 0;
  std::uint32_t delta = 0;
};

// Roots of Phi_{Pi - Delta}: positive roots spanned by Pi - Delta.
std::vector<int> parabolic_positive(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);
// Phi cap Span(Pi - Delta), sorted; identifies the direction of the face.
std::vector<int> span_key(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);
Vec rho_delta(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);
// rho_Pi - rho^Delta_Pi.
Vec face_center(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);
// {w rho_Pi : w in <s_alpha : alpha in Pi - Delta>}, sorted.
std::vector<Vec> face_vertices(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);

struct FaceCenterReport {
  bool ok = false;
  std::size_t vertices = 0;
  Vec average;
  Vec expected;
};

FaceCenterReport verify_face_center(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta);

// sum_k t_k omega_k for the fundamental weights of Pi.
Vec star_point(const SimpleSystem& pi, const std::vector<Rational>& t);
// t_k = <beta_k^vee, x>.
std::vector<Rational> star_coordinates(const RootSystem& rs, const SimpleSystem& pi, const Vec& x);

// Xi_Pi on X_Pi: t in [0,1]^r, the sum over D of prod (1 - t) prod t (rho_Pi - rho^D_Pi).
Vec xi(const RootSystem& rs, const SimpleSystem& pi, const std::vector<Rational>& t);
// Xi^Delta_Pi, with coordinates given only off Delta (in position order).
Vec xi_face(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta, const std::vector<Rational>& t_free);

// z_alpha = sum_i <omega_i^vee, alpha> f(t_i); both infinities are reported
// as +inf, the point at infinity of RP^1.
std::vector<real::ExtReal> theta_root(const RootSystem& rs, const SimpleSystem& pi, const std::vector<Rational>& t,
                                      const real::RationalDiffeo& f = real::default_diffeo());

struct StarCoords {
  int system = 0;
  std::vector<Rational> t;
};

// The lexicographically least simple system E with z >= 0 or inf on E, and
// the preimage in X_E. Throws DomainError when f^{-1} is not rational or z is
// not in the image.
StarCoords theta_root_inverse(const RootSystem& rs, const std::vector<SimpleSystem>& systems,
                              const std::vector<real::ExtReal>& z, const real::RationalDiffeo& f = real::default_diffeo());

// x in P: dominant representative x+ with rho - x+ a nonnegative combination
// of simple roots.
Vec dominant(const RootSystem& rs, const Vec& x);
bool permutahedron_membership(const RootSystem& rs, const Vec& x);
// First simple system (in the given order) with star coordinates in [0,1].
std::optional<StarCoords> star_membership(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x);
bool in_chamber(const RootSystem& rs, const SimpleSystem& pi, const Vec& x);
bool on_face(const RootSystem& rs, const SimpleSystem& pi, std::uint32_t delta, const Vec& y);

// F1 + v = F2 and v1 + v = v2, with v the difference of the centres.
bool parallel_faces(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const FaceDatum& a,
                    const FaceDatum& b);
bool parallel_face_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& v1,
                           const FaceDatum& f1, const Vec& v2, const FaceDatum& f2);

// A face direction and the position of a point relative to it: for P the
// roots Phi cap Span(Pi - Delta) and y minus the face centre, for the star
// the set Pi - Delta and the pairings of x with it.
using FaceKey = std::pair<std::vector<int>, Vec>;
std::set<FaceKey> permutahedron_face_keys(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& y);
std::set<FaceKey> star_face_keys(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x);
bool keys_meet(const std::set<FaceKey>& a, const std::set<FaceKey>& b);

// Relations on P and on the star, searched over all faces containing the points.
bool permutahedron_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& y1,
                           const Vec& y2);
bool star_related(const RootSystem& rs, const std::vector<SimpleSystem>& systems, const Vec& x1, const Vec& x2);

std::string vec_to_string(const Vec& v);
// "index,root coordinates,weight coordinates" rows.
std::string roots_csv(const RootSystem& rs);

}  // namespace cactus::roots
