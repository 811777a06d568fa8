#pragma once

// Polyhedral cones {x : E x = 0, A x >= 0} in canonical form and the
// exact-LP machinery that produces it: implied equalities migrate to the
// equation block, the equation block is echelonized, inequalities are
// reduced modulo the equation space, deduplicated and made irredundant.
// Two systems describe the same cone iff their canonical forms are
// byte-identical, which is what every dedup set in the fan code keys on.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grobfan/linalg.hpp"
#include "grobfan/rational.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan {

// Echelonized linear subspace {x : rows . x = 0}, with helpers to reduce
// normals modulo the row space and to move between ambient coordinates
// and the free coordinates that parametrize the solution space.
class EquationSpace {
 public:
  EquationSpace(const std::vector<IntVec>& rows, size_t n);

  size_t n() const { return n_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<IntVec>& rows() const { return rows_; }
  const std::vector<size_t>& free_columns() const { return free_; }

  // a minus the row-space component touching pivot coordinates; primitive.
  // Returns the zero vector when a is in the row space.
  IntVec reduce(const IntVec& a) const;

  // <a, x> as a functional of the free coordinates of x (a must already
  // be reduced: its pivot coordinates are zero, so this is a subselect).
  std::vector<Rational> functional(const IntVec& a) const;

  // Ambient solution point from free-coordinate values.
  std::vector<Rational> lift(const std::vector<Rational>& free_vals) const;

 private:
  size_t n_;
  std::vector<IntVec> rows_;      // primitive echelon rows
  std::vector<size_t> pivots_;    // first nonzero column of each row
  std::vector<size_t> free_;
};

class Cone {
 public:
  // Raw construction; only canonicalize() produces canonical values.
  Cone(size_t n, std::vector<IntVec> equations, std::vector<IntVec> inequalities)
      : n_(n), equations_(std::move(equations)),
        inequalities_(std::move(inequalities)) {}

  size_t n() const { return n_; }
  const std::vector<IntVec>& equations() const { return equations_; }
  const std::vector<IntVec>& inequalities() const { return inequalities_; }
  bool canonical() const { return canonical_; }

  // Canonical identity key; only valid on canonical cones.
  const std::string& key() const;

  bool operator==(const Cone& o) const { return key() == o.key(); }
  bool operator<(const Cone& o) const { return key() < o.key(); }

 private:
  friend Cone canonicalize(const Cone&);
  friend std::optional<std::vector<Rational>> relative_interior_point(
      const Cone&, bool);
  size_t n_;
  std::vector<IntVec> equations_;
  std::vector<IntVec> inequalities_;
  bool canonical_ = false;
  std::string key_;
  std::vector<Rational> ri_point_;  // cached witness, canonical cones only
};

// The canonical form described above.  Deterministic; idempotent.
Cone canonicalize(const Cone& c);

// n minus the canonical number of equations; requires a canonical cone.
size_t cone_dimension(const Cone& c);

// A point in the relative interior (every inequality strict, equations
// exact).  With strictly_positive set, additionally x_i > 0 for all i —
// then the result is nullopt when the cone has no strictly positive
// relative interior point.  The {0} cone yields the origin.
std::optional<std::vector<Rational>> relative_interior_point(
    const Cone& c, bool strictly_positive = false);

// All faces of a canonical cone (including itself and its minimal face),
// produced by recursively turning one facet inequality into an equation
// and re-canonicalizing, deduplicated by canonical form.  Sorted by key.
std::vector<Cone> faces_all(const Cone& c);

// Shared-map variant so a fan's face lattice is expanded once globally.
void collect_faces(const Cone& c, std::map<std::string, Cone>& out);

// Canonical basis of {w : <w, d> = 0 for all d in diffs}.
std::vector<IntVec> homogeneity_space(const std::vector<IntVec>& diffs,
                                      size_t n);

}  // namespace grobfan
