#include "kronvp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "kronvp/error.hpp"

namespace kronvp {

namespace {

void check_parts(const std::vector<Part>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorCode::NegativePart, "part " + std::to_string(parts[i]));
    if (parts[i] > kMaxPart)
      throw Error(ErrorCode::PartTooLarge, "part " + std::to_string(parts[i]));
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::NotWeaklyDecreasing,
                  std::to_string(parts[i - 1]) + " < " + std::to_string(parts[i]));
  }
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) { check_parts(parts_); }

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

std::size_t Partition::length() const {
  std::size_t n = parts_.size();
  while (n > 0 && parts_[n - 1] == 0) --n;
  return n;
}

Part Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), Part{0}); }

Part Partition::part(std::size_t i) const {
  return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
}

Partition Partition::padded(std::size_t n) const {
  Partition p = trimmed();
  if (p.parts_.size() < n) p.parts_.resize(n, 0);
  return p;
}

Partition Partition::trimmed() const {
  Partition p;
  p.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(length()));
  return p;
}

Partition Partition::scaled(Part k) const {
  std::vector<Part> out(parts_);
  for (Part& x : out) x *= k;
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool operator==(const Partition& a, const Partition& b) {
  const std::size_t la = a.length();
  return la == b.length() && std::equal(a.parts_.begin(), a.parts_.begin() + la, b.parts_.begin());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto c = a.part(i) <=> b.part(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Partition parse_partition(std::string_view text) {
  std::vector<Part> parts;
  text = strip(text);
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok =
        strip(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    Part v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec == std::errc::invalid_argument || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::InvalidToken, "'" + std::string(tok) + "'");
    if (ec == std::errc::result_out_of_range)
      throw Error(ErrorCode::PartTooLarge, "'" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

KroneckerTriple validate_triple(const Partition& mu, const Partition& nu, const Partition& lam,
                                LengthBounds bounds) {
  if (mu.weight() != nu.weight() || nu.weight() != lam.weight())
    throw Error(ErrorCode::WeightMismatch, "weights " + std::to_string(mu.weight()) + ", " +
                                               std::to_string(nu.weight()) + ", " +
                                               std::to_string(lam.weight()));
  auto check = [](const Partition& p, std::size_t bound, const char* name) {
    if (p.length() > bound)
      throw Error(ErrorCode::LengthExceedsBound, std::string(name) + " = (" + p.to_string() +
                                                     ") exceeds length " + std::to_string(bound));
  };
  check(mu, bounds.mu, "mu");
  check(nu, bounds.nu, "nu");
  check(lam, bounds.lam, "lam");
  return {mu.padded(bounds.mu), nu.padded(bounds.nu), lam.padded(bounds.lam), bounds};
}

KroneckerTriple canonical_sort(const KroneckerTriple& t) {
  std::array<Partition, 3> p{t.mu, t.nu, t.lam};
  int long_index = -1;
  for (int i = 0; i < 3; ++i) {
    if (p[i].length() <= 2) continue;
    if (long_index >= 0)
      throw Error(ErrorCode::NoCanonicalForm, "more than one partition has length > 2");
    long_index = i;
  }
  if (long_index >= 0 && p[long_index].length() > 4)
    throw Error(ErrorCode::NoCanonicalForm, "(" + p[long_index].to_string() + ") has length > 4");
  if (long_index >= 0 && long_index != 2) std::swap(p[long_index], p[2]);
  if (p[0].part(2) < p[1].part(2)) std::swap(p[0], p[1]);
  return validate_triple(p[0], p[1], p[2], LengthBounds{2, 2, 4});
}

bool is_canonical(const KroneckerTriple& t) {
  return t.mu.length() <= 2 && t.nu.length() <= 2 && t.lam.length() <= 4 &&
         t.mu.part(2) >= t.nu.part(2);
}

}  // namespace kronvp
