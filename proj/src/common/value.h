#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace aoc {

// Low-level kernels on little-endian uint64 word spans. Operands may have
// fewer words than the destination; missing high words read as zero. Every
// kernel masks its result to `width` bits so stored values stay canonical.
namespace words {

inline uint32_t WordsFor(uint32_t width) { return (width + 63u) / 64u; }

inline uint64_t TopMask(uint32_t width) {
  uint32_t rem = width % 64u;
  return rem == 0 ? ~0ull : ((1ull << rem) - 1ull);
}

inline uint64_t Get(const uint64_t* a, uint32_t na, uint32_t i) {
  return i < na ? a[i] : 0;
}

void Mask(uint64_t* dst, uint32_t nd, uint32_t width);
void Copy(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
          uint32_t width);
bool Equal(const uint64_t* a, uint32_t na, const uint64_t* b, uint32_t nb);
bool IsZero(const uint64_t* a, uint32_t na);

void And(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
void Or(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
        const uint64_t* b, uint32_t nb, uint32_t width);
void Xor(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
void Not(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint32_t width);

void Add(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
void Sub(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
void Mul(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
// Unsigned division; a divisor of zero yields quotient 0 and remainder 0.
void Div(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);
void Mod(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width);

// -1 / 0 / +1 comparing zero-extended operands.
int Compare(const uint64_t* a, uint32_t na, const uint64_t* b, uint32_t nb);

// Shift amounts are clamped: any amount >= width yields zero.
void Shl(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint64_t amount, uint32_t width);
void Shr(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint64_t amount, uint32_t width);

// Reductions over the low `width` bits of a.
uint64_t ReduceAnd(const uint64_t* a, uint32_t na, uint32_t width);
uint64_t ReduceOr(const uint64_t* a, uint32_t na, uint32_t width);
uint64_t ReduceXor(const uint64_t* a, uint32_t na, uint32_t width);

// dst = a[lo .. lo+width-1], zero beyond a's storage.
void Slice(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
           uint32_t lo, uint32_t width);
// dst[lo .. lo+w-1] = low w bits of src; dst is edited in place.
void Deposit(uint64_t* dst, uint32_t nd, const uint64_t* src, uint32_t ns,
             uint32_t lo, uint32_t w);

// First word as a shift amount; saturates to 2^32 when high words are set.
uint64_t ShiftAmount(const uint64_t* a, uint32_t na);

}  // namespace words

// Bit-accurate unsigned value: `elems` elements of `width` bits each
// (elems > 1 models unpacked arrays). Elements are stored consecutively,
// each occupying WordsFor(width) words. Values are always masked.
class Value {
 public:
  Value() : width_(1), elems_(1), storage_(1, 0) {}
  explicit Value(uint32_t width, uint64_t scalar = 0)
      : width_(width), elems_(1), storage_(words::WordsFor(width), 0) {
    storage_[0] = scalar;
    words::Mask(storage_.data(), WordsPerElem(), width_);
  }
  Value(uint32_t width, uint32_t elems, std::vector<uint64_t> raw);

  static Value FromUint64(uint32_t width, uint64_t v) { return Value(width, v); }
  // Parses decimal or 0x-prefixed hex of arbitrary length.
  static Value Parse(uint32_t width, const std::string& text);

  uint32_t width() const { return width_; }
  uint32_t elems() const { return elems_; }
  uint32_t WordsPerElem() const { return words::WordsFor(width_); }
  uint32_t TotalWords() const { return WordsPerElem() * elems_; }

  const uint64_t* data() const { return storage_.data(); }
  uint64_t* data() { return storage_.data(); }
  const uint64_t* elem(uint32_t i) const {
    return storage_.data() + static_cast<size_t>(i) * WordsPerElem();
  }
  uint64_t* elem(uint32_t i) {
    return storage_.data() + static_cast<size_t>(i) * WordsPerElem();
  }

  uint64_t AsUint64() const { return storage_.empty() ? 0 : storage_[0]; }
  bool IsZero() const;
  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }

  // Lowercase hex without leading zeros ("0" for zero); scalar only.
  std::string ToHex() const;
  std::string ToDecimal() const;
  // Binary string of exactly `width` digits; scalar only.
  std::string ToBinary() const;

  Value WithWidth(uint32_t new_width) const;

 private:
  uint32_t width_;
  uint32_t elems_;
  std::vector<uint64_t> storage_;
};

}  // namespace aoc
