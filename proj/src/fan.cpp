#include "fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace ptx {

Cone::Cone(std::vector<int> r) : rays(std::move(r)) {
  std::sort(rays.begin(), rays.end());
  for (size_t i = 1; i < rays.size(); ++i)
    if (rays[i] == rays[i - 1]) fail(Errc::InvalidArgument, "cone repeats a ray");
}

bool Cone::contains(const Cone& other) const {
  return std::includes(rays.begin(), rays.end(), other.rays.begin(), other.rays.end());
}

namespace {

Mat3 cone_matrix(const std::vector<Vec3>& rays, const Cone& c) {
  if (c.dim() != 3) fail(Errc::Internal, "cone_matrix needs a 3-dimensional cone");
  return Mat3::from_columns(rays[c.rays[0]], rays[c.rays[1]], rays[c.rays[2]]);
}

// Rows of sign(det)*adjugate define the closed cone by three >= 0 conditions.
void inward_rows(const std::vector<Vec3>& rays, const Cone& c, IMat& out) {
  Mat3 B = cone_matrix(rays, c);
  i64 d = B.det();
  if (d == 0) fail(Errc::InvalidArgument, "maximal cone is degenerate");
  i64 s = d > 0 ? 1 : -1;
  Mat3 A = B.adjugate();
  for (int i = 0; i < 3; ++i) out.push_back({s * A.m[i][0], s * A.m[i][1], s * A.m[i][2]});
}

// Interiors of two full-dimensional simplicial cones are disjoint iff their
// intersection has dimension < 3. The intersection is pointed (it sits inside
// a simplicial cone), so it is generated by the directions lying on pairs of
// active facets; those are cross products of the defining rows.
bool interiors_disjoint(const std::vector<Vec3>& rays, const Cone& a, const Cone& b) {
  IMat rows;
  inward_rows(rays, a, rows);
  inward_rows(rays, b, rows);
  auto feasible = [&rows](const Vec3& r) {
    for (const auto& row : rows)
      if (row[0] * r.x + row[1] * r.y + row[2] * r.z < 0) return false;
    return true;
  };
  IMat gens;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) {
      Vec3 u{rows[i][0], rows[i][1], rows[i][2]};
      Vec3 v{rows[j][0], rows[j][1], rows[j][2]};
      Vec3 r = cross(u, v);
      if (r.is_zero()) continue;
      if (feasible(r)) gens.push_back({r.x, r.y, r.z});
      Vec3 n = -r;
      if (feasible(n)) gens.push_back({n.x, n.y, n.z});
    }
  if (gens.empty()) return true;
  return int_rank(gens) <= 2;
}

std::string subdivision_label(const LatticeFan& fan, const Cone& center) {
  // Multi-index convention: v_i, v_j -> v_ij. Falls back to joining labels.
  char letter = 0;
  std::string digits;
  for (int r : center.rays) {
    const std::string& l = fan.label(r);
    if (l.size() < 2 || !isalpha(static_cast<unsigned char>(l[0]))) { letter = 0; break; }
    if (letter == 0)
      letter = l[0];
    else if (letter != l[0]) { letter = 0; break; }
    for (size_t i = 1; i < l.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(l[i]))) { letter = 0; break; }
      digits.push_back(l[i]);
    }
    if (letter == 0) break;
  }
  if (letter != 0) {
    std::sort(digits.begin(), digits.end());
    return std::string(1, letter) + digits;
  }
  std::string joined;
  for (int r : center.rays) {
    if (!joined.empty()) joined += "+";
    joined += fan.label(r);
  }
  return joined;
}

}  // namespace

void LatticeFan::finalize() {
  if (rays_.empty() || max_cones_.empty()) fail(Errc::InvalidArgument, "empty fan");
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (!is_primitive(rays_[i]))
      fail(Errc::InvalidArgument, "ray " + labels_[i] + " is not primitive");
    for (size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j]) fail(Errc::InvalidArgument, "duplicate ray");
  }
  std::vector<bool> used(rays_.size(), false);
  smooth_ = true;
  for (const Cone& c : max_cones_) {
    if (c.dim() != 3) fail(Errc::InvalidArgument, "maximal cone must have 3 generators");
    for (int r : c.rays) {
      if (r < 0 || r >= ray_count()) fail(Errc::InvalidArgument, "cone ray index out of range");
      used[r] = true;
    }
    i64 d = cone_matrix(rays_, c).det();
    if (d == 0) fail(Errc::InvalidArgument, "maximal cone is degenerate");
    if (d != 1 && d != -1) smooth_ = false;
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail(Errc::InvalidArgument, "ray " + labels_[i] + " lies in no maximal cone");
  for (size_t i = 0; i < max_cones_.size(); ++i)
    for (size_t j = i + 1; j < max_cones_.size(); ++j) {
      if (max_cones_[i] == max_cones_[j]) fail(Errc::InvalidArgument, "duplicate maximal cone");
      if (!interiors_disjoint(rays_, max_cones_[i], max_cones_[j]))
        fail(Errc::InvalidArgument, "cone interiors overlap");
    }

  // Wall accounting. With pairwise disjoint interiors, a fan of 3-dimensional
  // cones covers R^3 exactly when every 2-face bounds two maximal cones: the
  // support then has no 2-dimensional boundary, and R^3 minus finitely many
  // rays is connected.
  std::map<std::pair<int, int>, std::vector<int>> incidence;
  for (size_t ci = 0; ci < max_cones_.size(); ++ci) {
    const auto& r = max_cones_[ci].rays;
    incidence[{r[0], r[1]}].push_back(static_cast<int>(ci));
    incidence[{r[0], r[2]}].push_back(static_cast<int>(ci));
    incidence[{r[1], r[2]}].push_back(static_cast<int>(ci));
  }
  walls_.clear();
  complete_ = true;
  for (const auto& [key, cones] : incidence) {
    if (cones.size() == 2) {
      walls_.push_back(Wall{Cone({key.first, key.second}), cones[0], cones[1]});
    } else {
      complete_ = false;
    }
  }
  if (!complete_) walls_.clear();
}

LatticeFan LatticeFan::from_rays_cones(std::vector<Vec3> rays,
                                       std::vector<std::string> labels,
                                       std::vector<Cone> max_cones) {
  LatticeFan f;
  f.rays_ = std::move(rays);
  if (labels.empty()) {
    for (size_t i = 0; i < f.rays_.size(); ++i) labels.push_back("r" + std::to_string(i));
  }
  f.labels_ = std::move(labels);
  if (f.labels_.size() != f.rays_.size())
    fail(Errc::InvalidArgument, "label count differs from ray count");
  f.max_cones_ = std::move(max_cones);
  f.finalize();
  return f;
}

LatticeFan LatticeFan::p3() {
  return from_rays_cones(
      {{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {"v1", "v2", "v3", "v4"},
      {Cone({0, 1, 2}), Cone({0, 1, 3}), Cone({0, 2, 3}), Cone({1, 2, 3})});
}

LatticeFan LatticeFan::cube() {
  // Maximal cones are the eight sign octants; the normal fan of the 3-cube.
  std::vector<Vec3> rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::string> labels = {"u1", "u2", "u3", "u4", "u5", "u6"};
  std::vector<Cone> cones;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz) cones.push_back(Cone({sx, 2 + sy, 4 + sz}));
  return from_rays_cones(std::move(rays), std::move(labels), std::move(cones));
}

int LatticeFan::ray_index(const Vec3& v) const {
  for (size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == v) return static_cast<int>(i);
  return -1;
}

int LatticeFan::ray_index(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

Cone LatticeFan::cone_by_labels(const std::vector<std::string>& labels) const {
  std::vector<int> idx;
  for (const auto& l : labels) {
    int r = ray_index(l);
    if (r < 0) fail(Errc::InvalidArgument, "no ray labeled " + l);
    idx.push_back(r);
  }
  return Cone(std::move(idx));
}

bool LatticeFan::contains_cone(const Cone& c) const {
  if (c.dim() == 0 || c.dim() > 3) return false;
  for (int r : c.rays)
    if (r < 0 || r >= ray_count()) return false;
  for (const Cone& mc : max_cones_)
    if (mc.contains(c)) return true;
  return false;
}

LatticeFan LatticeFan::star_subdivide(const Cone& center) const {
  if (!is_smooth()) fail(Errc::NonSmoothInput, "star subdivision requires a smooth fan");
  if (center.dim() != 2 && center.dim() != 3)
    fail(Errc::CenterNotInFan, "center must be a 2- or 3-dimensional cone");
  if (!contains_cone(center)) fail(Errc::CenterNotInFan, "center is not a cone of the fan");

  Vec3 sum{0, 0, 0};
  for (int r : center.rays) sum = sum + rays_[r];
  if (!is_primitive(sum))
    fail(Errc::Internal, "new ray is not primitive");  // cannot happen for smooth centers

  LatticeFan f;
  f.rays_ = rays_;
  f.labels_ = labels_;
  f.rays_.push_back(sum);
  f.labels_.push_back(subdivision_label(*this, center));
  int new_ray = static_cast<int>(f.rays_.size()) - 1;

  for (const Cone& mc : max_cones_) {
    if (!mc.contains(center)) {
      f.max_cones_.push_back(mc);
      continue;
    }
    for (int s : center.rays) {
      std::vector<int> gens;
      for (int r : mc.rays)
        if (r != s) gens.push_back(r);
      gens.push_back(new_ray);
      f.max_cones_.push_back(Cone(std::move(gens)));
    }
  }
  f.finalize();
  return f;
}

LatticeFan LatticeFan::apply_blowup_sequence(
    const std::vector<std::vector<std::string>>& centers) const {
  LatticeFan f = *this;
  for (const auto& c : centers) {
    f = f.star_subdivide(f.cone_by_labels(c));
    if (!f.is_smooth() || !f.is_complete())
      fail(Errc::Internal, "blowup broke smoothness or completeness");
  }
  return f;
}

LatticeFan LatticeFan::permutohedral_p3() {
  // the four torus fixed points, then the six invariant lines between them
  return p3().apply_blowup_sequence(
      {{"v1", "v2", "v3"}, {"v1", "v2", "v4"}, {"v1", "v3", "v4"}, {"v2", "v3", "v4"},
       {"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}});
}

LatticeFan LatticeFan::permutohedral_cube() {
  // two antipodal vertices of the cube and the six invariant lines through them
  return cube().apply_blowup_sequence(
      {{"u1", "u3", "u5"}, {"u2", "u4", "u6"},
       {"u1", "u3"}, {"u1", "u5"}, {"u3", "u5"}, {"u2", "u4"}, {"u2", "u6"}, {"u4", "u6"}});
}

bool LatticeFan::iso_valid(const LatticeFan& a, const LatticeFan& b, const Mat3& M,
                           std::vector<int>& ray_map) {
  i64 d = M.det();
  if (d != 1 && d != -1) return false;
  if (a.ray_count() != b.ray_count() || a.max_cone_count() != b.max_cone_count()) return false;
  ray_map.assign(a.ray_count(), -1);
  std::vector<bool> hit(b.ray_count(), false);
  for (int i = 0; i < a.ray_count(); ++i) {
    int j = b.ray_index(M.apply(a.rays()[i]));
    if (j < 0 || hit[j]) return false;
    ray_map[i] = j;
    hit[j] = true;
  }
  std::set<Cone> b_cones(b.max_cones().begin(), b.max_cones().end());
  for (const Cone& c : a.max_cones()) {
    std::vector<int> img;
    for (int r : c.rays) img.push_back(ray_map[r]);
    if (!b_cones.count(Cone(std::move(img)))) return false;
  }
  return true;
}

std::optional<FanIso> LatticeFan::find_isomorphism(const LatticeFan& a, const LatticeFan& b) {
  if (!a.is_complete() || !b.is_complete())
    fail(Errc::NonCompleteInput, "fan isomorphism requires complete fans");
  if (!a.is_smooth() || !b.is_smooth())
    fail(Errc::NonSmoothInput, "fan isomorphism requires smooth fans");
  // The identity is preferred when the two fans coincide as sets of cones.
  {
    std::vector<int> ray_map;
    Mat3 id = Mat3::identity();
    if (iso_valid(a, b, id, ray_map)) return FanIso{id, ray_map};
  }
  auto all = all_isomorphisms(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<FanIso> LatticeFan::all_isomorphisms(const LatticeFan& a, const LatticeFan& b) {
  if (!a.is_complete() || !b.is_complete())
    fail(Errc::NonCompleteInput, "fan isomorphism requires complete fans");
  if (!a.is_smooth() || !b.is_smooth())
    fail(Errc::NonSmoothInput, "fan isomorphism requires smooth fans");
  std::vector<FanIso> found;
  if (a.ray_count() != b.ray_count() || a.max_cone_count() != b.max_cone_count()) return found;

  // Anchor on the first maximal cone of a and try every ordered maximal cone
  // of b as its image; exhaustive since an isomorphism is determined by the
  // image of one unimodular triple.
  const Cone& anchor = a.max_cones().front();
  Mat3 A = cone_matrix(a.rays(), anchor);
  Mat3 Ainv;
  if (!A.unimodular_inverse(Ainv)) fail(Errc::Internal, "anchor cone not unimodular");
  int perm_idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::set<std::vector<int>> seen;
  for (const Cone& target : b.max_cones()) {
    for (auto& p : perm_idx) {
      Mat3 B = Mat3::from_columns(b.rays()[target.rays[p[0]]], b.rays()[target.rays[p[1]]],
                                  b.rays()[target.rays[p[2]]]);
      Mat3 M = B.mul(Ainv);
      std::vector<int> ray_map;
      if (iso_valid(a, b, M, ray_map) && seen.insert(ray_map).second)
        found.push_back(FanIso{M, ray_map});
    }
  }
  return found;
}

}  // namespace ptx
