#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <vector>

#include "twochar/cohomology.hpp"
#include "twochar/cyclotomic.hpp"
#include "twochar/grpd_rep.hpp"

namespace oracle {

using twochar::CycNumber;

/// Numerical value of x under zeta_N -> exp(2 pi i / N).
std::complex<double> evaluate(const CycNumber& x);

/// Dimension and character of k[G] (x)_{k[H]} V at one target object,
/// computed from generators and relations.
struct TensorInduction {
  int dim;
  std::vector<CycNumber> traces;  // one per automorphism of the object, in out() order
};

TensorInduction tensor_induction(const twochar::GroupoidMap& alpha, const twochar::GroupoidRep& rep, int x);

/// Every exponent table on G with values in Z/M that passes the cocycle
/// identity, by enumeration of all M^(|G|^2) tables.
std::vector<std::vector<int>> all_cocycles(const twochar::FiniteGroup& g, int modulus);

/// All coboundary tables b(g) + b(h) - b(gh), by enumeration of all b.
std::vector<std::vector<int>> all_coboundaries(const twochar::FiniteGroup& g, int modulus);

/// Invariant factors of Z / B for the given cocycle and coboundary sets,
/// read off from the counts #{x : k x = 0} of the quotient.
std::vector<std::int64_t> quotient_invariant_factors(const std::vector<std::vector<int>>& cocycles,
                                                     const std::vector<std::vector<int>>& coboundaries,
                                                     int modulus);

}  // namespace oracle
