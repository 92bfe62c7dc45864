#pragma once

#include <string>
#include <vector>

#include "kronvp/numeric.hpp"
#include "kronvp/partition.hpp"

namespace kronvp {

/// constituents[r][j] is the coefficient of k^j on the residue class k = r mod period.
struct Quasipolynomial {
  int period = 1;
  std::vector<std::vector<Rational>> constituents;

  int degree() const;
};

Rational eval_quasipolynomial(const Quasipolynomial& q, std::int64_t k);

/// Coefficients (ascending powers) of the unique polynomial of degree < xs.size()
/// through the given points.
std::vector<Rational> lagrange_interpolate(const std::vector<std::int64_t>& xs,
                                           const std::vector<Rational>& ys);

/// Number of samples fit_quasipolynomial needs: (max_degree + 1) * max_period
/// for the fit window plus 2 * max_period held out.
std::size_t required_samples(int max_period, int max_degree);

/// Smallest (period, degree), in that order, whose constituents, interpolated
/// on the earliest degree + 1 samples of each residue class, reproduce the
/// whole sequence. seq[0] is the value at k = 1.
Quasipolynomial fit_quasipolynomial(const std::vector<BigInt>& seq, int max_period, int max_degree);

enum class DilationMethod { Kron224, Atomic224, AtomicNM, Oracle };

DilationMethod parse_dilation_method(const std::string& name);
const char* dilation_method_name(DilationMethod m);

/// f(k) for k = 1..kmax on (k mu, k nu, k lam). AtomicNM takes (n, m) from
/// the triple's (mu, nu) bounds. Oracle honours `weight_cap`.
std::vector<BigInt> dilate_sequence(const KroneckerTriple& t, std::int64_t kmax, DilationMethod method,
                                    int threads = 1, Part weight_cap = 30);

}  // namespace kronvp
