#include "permutiple/digits.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "permutiple/errors.hpp"

namespace permutiple {

Params::Params(int multiplier, int base) : n_(multiplier), b_(base) {
  if (base < 2 || base > kMaxBase) {
    throw InvalidParams(fmt::format("base {} outside [2, {}]", base, kMaxBase));
  }
  if (!(1 < multiplier && multiplier < base)) {
    throw InvalidParams(
        fmt::format("multiplier {} must satisfy 1 < n < b = {}", multiplier, base));
  }
}

DigitVec::DigitVec(std::vector<int> lsd_first, int base)
    : digits_(std::move(lsd_first)), base_(base) {
  if (base_ < 2) {
    throw InvalidDigits(fmt::format("base {} is below 2", base_));
  }
  if (digits_.empty()) {
    throw InvalidDigits("digit vector must hold at least one digit");
  }
  for (int d : digits_) {
    if (d < 0 || d >= base_) {
      throw InvalidDigits(fmt::format("digit {} outside [0, {})", d, base_));
    }
  }
}

DigitVec DigitVec::from_msd_first(std::span<const int> msd_first, int base) {
  return DigitVec(std::vector<int>(msd_first.rbegin(), msd_first.rend()), base);
}

std::vector<int> DigitVec::msd_first() const {
  return {digits_.rbegin(), digits_.rend()};
}

std::string DigitVec::to_string() const {
  return fmt::format("({})_{}", fmt::join(msd_first(), ","), base_);
}

Natural value(const DigitVec& v) {
  Natural acc = 0;
  for (auto it = v.lsd_first().rbegin(); it != v.lsd_first().rend(); ++it) {
    acc = acc * v.base() + *it;
  }
  return acc;
}

DigitVec digits_of(const Natural& m, int base, std::size_t width) {
  if (base < 2) {
    throw InvalidDigits(fmt::format("base {} is below 2", base));
  }
  if (width == 0) {
    throw InvalidDigits("width must be at least 1");
  }
  if (m < 0) {
    throw InvalidDigits("negative value has no digit expansion");
  }
  std::vector<int> out(width, 0);
  Natural rest = m;
  for (std::size_t j = 0; j < width; ++j) {
    out[j] = static_cast<int>(rest % base);
    rest /= base;
  }
  if (rest != 0) {
    throw OverflowError(
        fmt::format("{} does not fit in {} base-{} digits", m.str(), width, base));
  }
  return DigitVec(std::move(out), base);
}

namespace {

void require_same_shape(const DigitVec& a, const DigitVec& b, const Params& p) {
  if (a.size() != b.size()) {
    throw InvalidDigits(
        fmt::format("length mismatch: {} vs {}", a.size(), b.size()));
  }
  if (a.base() != p.base() || b.base() != p.base()) {
    throw InvalidDigits(fmt::format("digit vectors must be in base {}", p.base()));
  }
}

}  // namespace

CarrySeq carry_sequence(const DigitVec& digits, const DigitVec& permuted,
                        const Params& p) {
  require_same_shape(digits, permuted, p);
  const long long n = p.multiplier();
  const long long b = p.base();
  CarrySeq out;
  out.carries.reserve(digits.size() + 1);
  out.carries.push_back(0);
  long long c = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const long long numer = n * permuted[j] - digits[j] + c;
    if (numer % b != 0) {
      throw InvalidAlignment(
          fmt::format("position {}: {} is not divisible by {}", j, numer, b));
    }
    c = numer / b;
    if (c < 0 || c > n - 1) {
      throw InvalidAlignment(
          fmt::format("position {}: carry {} outside [0, {}]", j, c, n - 1));
    }
    out.carries.push_back(static_cast<int>(c));
  }
  return out;
}

CarrySeq multiplication_carries(const DigitVec& permuted, const Params& p) {
  const long long n = p.multiplier();
  const long long b = p.base();
  CarrySeq out;
  out.carries.reserve(permuted.size() + 1);
  out.carries.push_back(0);
  long long c = 0;
  for (int q : permuted.lsd_first()) {
    c = (n * q + c) / b;
    out.carries.push_back(static_cast<int>(c));
  }
  return out;
}

PermutipleWitness PermutipleWitness::assemble(
    const Params& p, DigitVec digits, DigitVec permuted,
    std::optional<std::vector<std::size_t>> sigma) {
  CarrySeq carries = multiplication_carries(permuted, p);
  return PermutipleWitness{p, std::move(digits), std::move(permuted),
                           std::move(carries), std::move(sigma)};
}

std::string PermutipleWitness::to_string() const {
  return fmt::format("{} = {}*{}", digits.to_string(), params.multiplier(),
                     permuted.to_string());
}

WitnessReport verify_witness(const PermutipleWitness& w) {
  WitnessReport r;
  const int n = w.params.multiplier();
  const int b = w.params.base();
  const std::size_t len = w.digits.size();

  r.shapes_match = w.digits.size() == w.permuted.size() &&
                   w.digits.base() == b && w.permuted.base() == b;

  std::vector<int> lhs(w.digits.lsd_first().begin(), w.digits.lsd_first().end());
  std::vector<int> rhs(w.permuted.lsd_first().begin(),
                       w.permuted.lsd_first().end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  r.multiset_equal = lhs == rhs;

  r.value_relation = w.digits.base() == w.permuted.base() &&
                     value(w.digits) == n * value(w.permuted);

  const auto& c = w.carries.carries;
  r.initial_carry_zero = !c.empty() && c.front() == 0;
  r.final_carry_zero = !c.empty() && c.back() == 0;
  r.carries_bounded = std::all_of(c.begin(), c.end(),
                                  [n](int x) { return 0 <= x && x <= n - 1; });
  r.recurrence_consistent = r.shapes_match && c.size() == len + 1;
  for (std::size_t j = 0; r.recurrence_consistent && j < len; ++j) {
    const long long lhs_term = static_cast<long long>(b) * c[j + 1] - c[j];
    const long long rhs_term =
        static_cast<long long>(n) * w.permuted[j] - w.digits[j];
    r.recurrence_consistent = lhs_term == rhs_term;
  }

  if (w.sigma) {
    const auto& s = *w.sigma;
    r.sigma_valid = r.shapes_match && s.size() == len;
    std::vector<bool> seen(len, false);
    for (std::size_t j = 0; r.sigma_valid && j < len; ++j) {
      if (s[j] >= len || seen[s[j]] || w.permuted[j] != w.digits[s[j]]) {
        r.sigma_valid = false;
      } else {
        seen[s[j]] = true;
      }
    }
  }
  return r;
}

std::optional<std::vector<std::size_t>> find_sigma(const DigitVec& digits,
                                                   const DigitVec& permuted) {
  if (digits.size() != permuted.size() || digits.base() != permuted.base()) {
    return std::nullopt;
  }
  // Positions of each digit value in `digits`, consumed in order.
  std::vector<std::vector<std::size_t>> slots(digits.base());
  for (std::size_t j = digits.size(); j-- > 0;) {
    slots[digits[j]].push_back(j);
  }
  std::vector<std::size_t> sigma(digits.size());
  for (std::size_t j = 0; j < permuted.size(); ++j) {
    auto& free = slots[permuted[j]];
    if (free.empty()) return std::nullopt;
    sigma[j] = free.back();
    free.pop_back();
  }
  return sigma;
}

DigitVec parse_msd_first(const std::string& text, int base) {
  std::vector<int> msd;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    int d = 0;
    auto [ptr, ec] = std::from_chars(first, last, d);
    if (first == last || ec != std::errc() || ptr != last) {
      throw InvalidDigits(fmt::format("cannot parse digit list '{}'", text));
    }
    msd.push_back(d);
    pos = end + 1;
  }
  return DigitVec::from_msd_first(msd, base);
}

}  // namespace permutiple
