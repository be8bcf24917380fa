#pragma once

#include <array>
#include <string>

#include "linarr/arrangement.hpp"

namespace linarr {

using Matrix3 = std::array<std::array<Cyclotomic, 3>, 3>;

/// Generator matrices of a finite complex reflection group, loaded from
/// a JSON data file. Correctness is enforced behaviorally (projective
/// group order, reflection count), never assumed.
struct ReflectionGroupData {
  std::string name;
  int conductor = 1;
  int reflection_count = 0;    // expected number of mirror lines
  long long projective_order = 0;  // expected closure size up to scalars
  std::vector<Matrix3> generators;
};

ReflectionGroupData load_reflection_data(const std::string& path);

struct ReflectionClosure {
  long long order;  // number of scalar classes actually found
  Arrangement arrangement;
};

/// Breadth-first closure of the generated matrix group up to scalar
/// equivalence; mirrors of the reflections in the closure, deduplicated,
/// form the arrangement. Throws if the closure exceeds the safety bound
/// or the behavioral checks (order, reflection count) fail.
ReflectionClosure reflection_closure(const ReflectionGroupData& data,
                                     long long safety_bound = 100000);

inline Arrangement reflection_arrangement(const ReflectionGroupData& data) {
  return reflection_closure(data).arrangement;
}

/// d rational lines in general position (only double points), seeded
/// rejection sampling; deterministic per seed.
Arrangement generic_arrangement(int d, unsigned long long seed, int max_retries = 10000);

/// The six explicit lines of the general-position sextet L.
Arrangement paper_L();

/// Six lines cross-joining two collinear point triples (a Pappus
/// configuration with the three triple-making lines removed); same weak
/// combinatorics as paper_L but with three collinear double points.
Arrangement pappus_P();

/// 3n lines cut out by (x^n - y^n)(y^n - z^n)(z^n - x^n), conductor n.
Arrangement fermat(int n);

/// fermat(n) plus the lines x = 0 and y = 0.
Arrangement fermat_extended(int n);

/// n lines spanned by regular-2n-gon vertices Q_alpha Q_{pi-2alpha},
/// alpha = 2k*pi/n, in exact cyclotomic coordinates (conductor 2n); the
/// tangent line is substituted when the two vertices coincide. The unit
/// circle is carried through a fixed diagonal change of coordinates so
/// that no imaginary unit needs to be adjoined (incidence data is
/// projectively invariant).
Arrangement boroczky(int n);

}  // namespace linarr
