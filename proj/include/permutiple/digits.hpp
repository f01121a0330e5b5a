#pragma once

// Exact base-b digit arithmetic and permutiple witness verification.
//
// Digit vectors are stored least-significant-first: position j holds the
// coefficient of b^j. Everything that is printed or parsed for humans is
// most-significant-first, e.g. "(8,7,9,1,2)_10".

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permutiple {

using Natural = boost::multiprecision::cpp_int;

// The multiplier n and base b. Always satisfies 1 < n < b.
class Params {
 public:
  // Throws InvalidParams unless 1 < multiplier < base.
  Params(int multiplier, int base);

  int multiplier() const noexcept { return n_; }
  int base() const noexcept { return b_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int n_;
  int b_;
};

// Largest base accepted by Params; keeps every intermediate in 64 bits.
inline constexpr int kMaxBase = 1 << 16;

class DigitVec {
 public:
  // `lsd_first[j]` is the coefficient of base^j. Throws InvalidDigits on an
  // empty vector, a base below 2, or any digit outside [0, base).
  DigitVec(std::vector<int> lsd_first, int base);

  static DigitVec from_msd_first(std::span<const int> msd_first, int base);

  int base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  int operator[](std::size_t j) const { return digits_[j]; }
  std::span<const int> lsd_first() const noexcept { return digits_; }
  std::vector<int> msd_first() const;

  // "(8,7,9,1,2)_10"
  std::string to_string() const;

  friend bool operator==(const DigitVec&, const DigitVec&) = default;

 private:
  std::vector<int> digits_;
  int base_;
};

// Carries c_0 .. c_len of a digit alignment.
struct CarrySeq {
  std::vector<int> carries;

  friend bool operator==(const CarrySeq&, const CarrySeq&) = default;
};

Natural value(const DigitVec& v);

// Inverse of value(), padded with leading zeros to `width`. Throws
// OverflowError when m >= base^width.
DigitVec digits_of(const Natural& m, int base, std::size_t width);

// Solves b*c_{j+1} - c_j = n*permuted[j] - digits[j] from c_0 = 0. Throws
// InvalidAlignment when some step leaves a remainder or a carry falls
// outside [0, n-1]; InvalidDigits on mismatched lengths or bases.
CarrySeq carry_sequence(const DigitVec& digits, const DigitVec& permuted,
                        const Params& p);

// Carries of the schoolbook product n * permuted. Always defined; they agree
// with carry_sequence exactly when digits is that product's low digits.
CarrySeq multiplication_carries(const DigitVec& permuted, const Params& p);

struct PermutipleWitness {
  Params params;
  DigitVec digits;
  DigitVec permuted;
  CarrySeq carries;
  // permuted[j] == digits[sigma[j]] when present.
  std::optional<std::vector<std::size_t>> sigma;

  // Builds a witness whose carries are the multiplication carries of
  // n * permuted. Nothing is verified here.
  static PermutipleWitness assemble(
      const Params& p, DigitVec digits, DigitVec permuted,
      std::optional<std::vector<std::size_t>> sigma = std::nullopt);

  // "(8,7,9,1,2)_10 = 4*(2,1,9,7,8)_10"
  std::string to_string() const;
};

struct WitnessReport {
  bool shapes_match = false;          // equal lengths and base == params.b
  bool multiset_equal = false;
  bool value_relation = false;        // value(digits) == n * value(permuted)
  bool recurrence_consistent = false;
  bool initial_carry_zero = false;
  bool final_carry_zero = false;
  bool carries_bounded = false;       // every carry in [0, n-1]
  bool sigma_valid = true;            // vacuously true when sigma is absent

  bool is_permutiple() const noexcept {
    return shapes_match && multiset_equal && value_relation &&
           recurrence_consistent && initial_carry_zero && final_carry_zero &&
           carries_bounded && sigma_valid;
  }
};

WitnessReport verify_witness(const PermutipleWitness& w);

// Some bijection sigma with permuted[j] == digits[sigma[j]], if the two
// vectors are digit permutations of each other.
std::optional<std::vector<std::size_t>> find_sigma(const DigitVec& digits,
                                                   const DigitVec& permuted);

// Parses "8,7,9,1,2" (most-significant first). Throws InvalidDigits.
DigitVec parse_msd_first(const std::string& text, int base);

}  // namespace permutiple
