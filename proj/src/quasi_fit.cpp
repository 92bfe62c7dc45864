#include "kronvp/quasi_fit.hpp"

#include "kronvp/character_oracle.hpp"
#include "kronvp/error.hpp"
#include "kronvp/fnm.hpp"
#include "kronvp/kron224.hpp"
#include "kronvp/parallel.hpp"

namespace kronvp {

int Quasipolynomial::degree() const {
  int d = 0;
  for (const auto& c : constituents) {
    for (int j = static_cast<int>(c.size()) - 1; j > d; --j) {
      if (c[static_cast<std::size_t>(j)] != 0) {
        d = j;
        break;
      }
    }
  }
  return d;
}

Rational eval_quasipolynomial(const Quasipolynomial& q, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "quasipolynomial evaluated at negative k");
  const auto& c = q.constituents.at(static_cast<std::size_t>(k % q.period));
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * k + *it;
  return v;
}

std::vector<Rational> lagrange_interpolate(const std::vector<std::int64_t>& xs,
                                           const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (k - x_j) / (x_i - x_j), ascending powers
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t p = 0; p < basis.size(); ++p) {
        next[p + 1] += basis[p];
        next[p] -= basis[p] * xs[j];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = ys[i] / denom;
    for (std::size_t p = 0; p < n; ++p) out[p] += basis[p] * scale;
  }
  return out;
}

std::size_t required_samples(int max_period, int max_degree) {
  return static_cast<std::size_t>((max_degree + 1) * max_period + 2 * max_period);
}

Quasipolynomial fit_quasipolynomial(const std::vector<BigInt>& seq, int max_period, int max_degree) {
  if (max_period < 1 || max_degree < 0)
    throw Error(ErrorCode::InvalidArgument, "max_period must be >= 1 and max_degree >= 0");
  if (seq.size() < required_samples(max_period, max_degree))
    throw Error(ErrorCode::InsufficientData,
                std::to_string(seq.size()) + " samples, need " +
                    std::to_string(required_samples(max_period, max_degree)));
  const auto len = static_cast<std::int64_t>(seq.size());
  for (int p = 1; p <= max_period; ++p) {
    for (int d = 0; d <= max_degree; ++d) {
      Quasipolynomial q;
      q.period = p;
      q.constituents.resize(static_cast<std::size_t>(p));
      bool ok = true;
      for (int r = 0; r < p && ok; ++r) {
        std::vector<std::int64_t> xs;
        std::vector<Rational> ys;
        std::int64_t k = (r == 0) ? p : r;  // first k >= 1 with k = r mod p
        for (; k <= len && static_cast<int>(xs.size()) < d + 1; k += p) {
          xs.push_back(k);
          ys.emplace_back(seq[static_cast<std::size_t>(k - 1)]);
        }
        if (static_cast<int>(xs.size()) < d + 1) {
          ok = false;
          break;
        }
        q.constituents[static_cast<std::size_t>(r)] = lagrange_interpolate(xs, ys);
      }
      if (!ok) continue;
      for (std::int64_t k = 1; k <= len && ok; ++k)
        ok = eval_quasipolynomial(q, k) == Rational(seq[static_cast<std::size_t>(k - 1)]);
      if (ok) return q;
    }
  }
  throw Error(ErrorCode::NoFitWithinBounds, "no quasipolynomial with period <= " +
                                                std::to_string(max_period) + " and degree <= " +
                                                std::to_string(max_degree));
}

DilationMethod parse_dilation_method(const std::string& name) {
  if (name == "kron224") return DilationMethod::Kron224;
  if (name == "atomic224") return DilationMethod::Atomic224;
  if (name == "atomic_nm") return DilationMethod::AtomicNM;
  if (name == "oracle") return DilationMethod::Oracle;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
}

const char* dilation_method_name(DilationMethod m) {
  switch (m) {
    case DilationMethod::Kron224: return "kron224";
    case DilationMethod::Atomic224: return "atomic224";
    case DilationMethod::AtomicNM: return "atomic_nm";
    case DilationMethod::Oracle: return "oracle";
  }
  return "?";
}

std::vector<BigInt> dilate_sequence(const KroneckerTriple& t, std::int64_t kmax, DilationMethod method,
                                    int threads, Part weight_cap) {
  if (kmax < 1) throw Error(ErrorCode::InvalidArgument, "kmax must be positive");
  if (method == DilationMethod::Oracle && t.weight() * kmax > weight_cap)
    throw Error(ErrorCode::WeightCapExceeded, "dilated weight " + std::to_string(t.weight() * kmax) +
                                                  " > cap " + std::to_string(weight_cap));
  std::vector<BigInt> out(static_cast<std::size_t>(kmax));
  parallel_for(out.size(), threads, [&](std::size_t i) {
    const auto k = static_cast<Part>(i) + 1;
    const Partition mu = t.mu.scaled(k), nu = t.nu.scaled(k), lam = t.lam.scaled(k);
    switch (method) {
      case DilationMethod::Kron224:
        out[i] = kron224(validate_triple(mu, nu, lam, LengthBounds{4, 4, 4}));
        break;
      case DilationMethod::Atomic224:
        out[i] = atomic224(validate_triple(mu, nu, lam, LengthBounds{4, 4, 4}));
        break;
      case DilationMethod::AtomicNM:
        out[i] = atomic_nm(static_cast<int>(t.bounds.mu), static_cast<int>(t.bounds.nu),
                           validate_triple(mu, nu, lam, t.bounds));
        break;
      case DilationMethod::Oracle:
        out[i] = kron_oracle_char(mu, nu, lam, weight_cap);
        break;
    }
  });
  return out;
}

}  // namespace kronvp
