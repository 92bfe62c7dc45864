#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kronvp {

using Part = std::int64_t;

/// Parts are machine integers; counts derived from them are BigInt. The cap
/// keeps every linear form over parts (coefficients up to 5, at most a few
/// dozen terms) far from int64 overflow.
inline constexpr Part kMaxPart = Part{1} << 48;

/// Weakly decreasing list of nonnegative parts. Trailing zeros are kept as
/// given but ignored by comparison, length(), and hashing-style keys.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  /// Number of nonzero parts.
  std::size_t length() const;
  Part weight() const;

  /// 1-based access, zero past the stored parts.
  Part part(std::size_t i) const;

  Partition padded(std::size_t n) const;
  Partition trimmed() const;
  Partition scaled(Part k) const;

  /// Comma-separated parts exactly as stored.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<Part> parts_;
};

Partition parse_partition(std::string_view text);

struct LengthBounds {
  std::size_t mu = 2;
  std::size_t nu = 2;
  std::size_t lam = 4;
};

struct KroneckerTriple {
  Partition mu;
  Partition nu;
  Partition lam;
  LengthBounds bounds;

  Part weight() const { return lam.weight(); }
};

/// Checks equal weights and length bounds, then pads each partition with
/// zeros to its bound.
KroneckerTriple validate_triple(const Partition& mu, const Partition& nu,
                                const Partition& lam, LengthBounds bounds = {});

/// Permutes (mu, nu, lam) into the (2,2,4) pattern with mu_2 >= nu_2. The
/// result is padded to (2,2,4).
KroneckerTriple canonical_sort(const KroneckerTriple& t);

bool is_canonical(const KroneckerTriple& t);

}  // namespace kronvp
