#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace ptx {

// A cone is stored as the sorted list of indices of its generating rays.
// All fans in scope are simplicial, so every subset of a maximal cone's
// generators is a face.
struct Cone {
  std::vector<int> rays;

  Cone() = default;
  explicit Cone(std::vector<int> r);
  int dim() const { return static_cast<int>(rays.size()); }
  bool contains(const Cone& other) const;
  bool operator==(const Cone& o) const { return rays == o.rays; }
  bool operator<(const Cone& o) const { return rays < o.rays; }
};

struct Wall {
  Cone cone;      // the 2-dimensional face
  int cone_a;     // indices of the two incident maximal cones
  int cone_b;
};

struct FanIso {
  Mat3 matrix;
  std::vector<int> ray_map;  // ray i of source -> ray_map[i] of target
};

class LatticeFan {
 public:
  LatticeFan() = default;

  // Seed fans.
  static LatticeFan p3();
  static LatticeFan cube();

  // Iterated star subdivisions giving the two models of the permutohedral
  // variety: 4 vertex cones + 6 edge cones of the simplex fan, and 2 antipodal
  // vertex cones + their 6 incident edge cones of the cube fan.
  static LatticeFan permutohedral_p3();
  static LatticeFan permutohedral_cube();

  // General constructor; validates the fan condition but allows non-smooth
  // and non-complete inputs.
  static LatticeFan from_rays_cones(std::vector<Vec3> rays,
                                    std::vector<std::string> labels,
                                    std::vector<Cone> max_cones);

  const std::vector<Vec3>& rays() const { return rays_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  const std::string& label(int ray) const { return labels_[ray]; }

  int ray_count() const { return static_cast<int>(rays_.size()); }
  int max_cone_count() const { return static_cast<int>(max_cones_.size()); }
  int wall_count() const { return static_cast<int>(walls_.size()); }
  const std::vector<Wall>& walls() const { return walls_; }

  int ray_index(const Vec3& v) const;          // -1 if absent
  int ray_index(const std::string& label) const;
  Cone cone_by_labels(const std::vector<std::string>& labels) const;

  bool is_smooth() const { return smooth_; }
  bool is_complete() const { return complete_; }

  // True iff the cone is a face of some maximal cone.
  bool contains_cone(const Cone& c) const;

  // Star subdivision at a 2- or 3-dimensional cone of a smooth fan. The new
  // ray is the sum of the center's generators (asserted primitive) and is
  // labeled by the multi-index convention when the center's rays carry
  // single-letter labels.
  LatticeFan star_subdivide(const Cone& center) const;

  // Iterated star subdivision. Each center names rays by label and must be a
  // cone of the fan at the time it is subdivided; smoothness and completeness
  // are checked after every step.
  LatticeFan apply_blowup_sequence(const std::vector<std::vector<std::string>>& centers) const;

  // Unimodular matrix identifying the two fans (rays onto rays, cones onto
  // cones), or nullopt. Both fans must be complete and smooth.
  static std::optional<FanIso> find_isomorphism(const LatticeFan& a, const LatticeFan& b);
  // Every isomorphism a -> b. For a complete smooth fan this enumerates the
  // full symmetry group when a == b.
  static std::vector<FanIso> all_isomorphisms(const LatticeFan& a, const LatticeFan& b);

 private:
  std::vector<Vec3> rays_;
  std::vector<std::string> labels_;
  std::vector<Cone> max_cones_;
  std::vector<Wall> walls_;
  bool smooth_ = false;
  bool complete_ = false;

  void finalize();  // validates and computes walls / flags
  static bool iso_valid(const LatticeFan& a, const LatticeFan& b, const Mat3& M,
                        std::vector<int>& ray_map);
};

}  // namespace ptx
