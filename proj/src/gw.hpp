#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classes.hpp"

namespace ptx {

// A stationary Gromov-Witten query: genus, curve class on a side model, and a
// number of point insertions.
struct GWQuery {
  int genus = 0;
  CurveClass beta;
  int point_insertions = 0;
};

// Dimension surplus of a stationary query: -K.beta - 2n. Each point insertion
// cuts the virtual dimension by two net of its marked point, so the query can
// carry a nonzero invariant only when this vanishes; after full point descent
// it coincides with -K.beta of the descended class.
i64 vdim(const GWQuery& q);

// Trades every point insertion for a blowup point: the model gains one point
// per insertion and beta loses the new exceptional line class.
GWQuery point_descent(const GWQuery& q);

struct GuardResult {
  bool ok = false;
  std::string detail;
};

// Side conditions under which the degree-preserving blowup correspondences
// are justified (not enforced by the coefficient maps).
GuardResult p3_balance_guard(const CurveClass& beta);  // P3 side: 2d = sum a, some a_i != 0, i > 4
GuardResult cube_balance_guard(const CurveClass& beta);  // cube side: sum d = sum a, some a_i != 0, i > 2
GuardResult cube_side_cremona_guard(const CurveClass& beta);  // cube side, k = 4: {a3, a4} != {0}

// The degree correspondence between P3-kind and cube-kind classes. Inputs
// with k < 4 (resp. fewer than 2 cube points) are padded with zero
// coefficients. Warnings collect failed side conditions.
CurveClass p3_to_cube_class(const CurveClass& beta, std::vector<std::string>* warnings = nullptr);
CurveClass cube_to_p3_class(const CurveClass& beta, std::vector<std::string>* warnings = nullptr);

// The cube-side symmetry on classes with exactly four blowup points,
// including the swap of the two non-toric points.
CurveClass cube_side_cremona(const CurveClass& beta);

// Base table of known stationary invariants, keyed by model kind, genus,
// degree vector and number of simple point conditions.
struct BaseTable {
  struct Entry {
    ModelKind kind;
    int genus;
    IVec degrees;  // sorted descending for cube entries
    int npoints;
    i64 value;
    std::string provenance;  // PAPER | TRIVIAL | DERIVED
  };
  std::vector<Entry> entries;

  static BaseTable builtin();
  static BaseTable parse(const std::string& text);
  std::string to_text() const;
  const Entry* lookup(ModelKind kind, int genus, const IVec& degrees, int npoints) const;
};

struct TraceStep {
  std::string rule;
  std::string input;
  std::string output;
  std::string note;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  bool resolved = false;
  i64 value = 0;
  std::string provenance;
  std::string normal_form;  // final class when unresolved
  std::string unresolved_reason;
};

// Deterministic reduction: descend insertions, canonicalize point labels,
// apply the guarded degree-lowering Cremona on the P3 side, cross between the
// models through the blowup correspondence, and look the normal form up in
// the table after every step. Throws NonVdimZero for queries whose surplus
// does not vanish after descent.
ReductionTrace reduce(const GWQuery& q, const BaseTable& table);

}  // namespace ptx
