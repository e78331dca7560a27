#include "common/value.h"

#include <algorithm>
#include <cassert>

#include "common/error.h"

namespace aoc {
namespace words {

void Mask(uint64_t* dst, uint32_t nd, uint32_t width) {
  uint32_t nw = WordsFor(width);
  for (uint32_t i = nw; i < nd; ++i) dst[i] = 0;
  if (nw > 0 && nw <= nd) dst[nw - 1] &= TopMask(width);
}

void Copy(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
          uint32_t width) {
  for (uint32_t i = 0; i < nd; ++i) dst[i] = Get(a, na, i);
  Mask(dst, nd, width);
}

bool Equal(const uint64_t* a, uint32_t na, const uint64_t* b, uint32_t nb) {
  uint32_t n = std::max(na, nb);
  for (uint32_t i = 0; i < n; ++i) {
    if (Get(a, na, i) != Get(b, nb, i)) return false;
  }
  return true;
}

bool IsZero(const uint64_t* a, uint32_t na) {
  for (uint32_t i = 0; i < na; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

void And(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  for (uint32_t i = 0; i < nd; ++i) dst[i] = Get(a, na, i) & Get(b, nb, i);
  Mask(dst, nd, width);
}

void Or(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
        const uint64_t* b, uint32_t nb, uint32_t width) {
  for (uint32_t i = 0; i < nd; ++i) dst[i] = Get(a, na, i) | Get(b, nb, i);
  Mask(dst, nd, width);
}

void Xor(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  for (uint32_t i = 0; i < nd; ++i) dst[i] = Get(a, na, i) ^ Get(b, nb, i);
  Mask(dst, nd, width);
}

void Not(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint32_t width) {
  for (uint32_t i = 0; i < nd; ++i) dst[i] = ~Get(a, na, i);
  Mask(dst, nd, width);
}

void Add(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  unsigned __int128 carry = 0;
  for (uint32_t i = 0; i < nd; ++i) {
    unsigned __int128 s = carry;
    s += Get(a, na, i);
    s += Get(b, nb, i);
    dst[i] = static_cast<uint64_t>(s);
    carry = s >> 64;
  }
  Mask(dst, nd, width);
}

void Sub(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  unsigned __int128 borrow = 0;
  for (uint32_t i = 0; i < nd; ++i) {
    unsigned __int128 av = Get(a, na, i);
    unsigned __int128 bv = Get(b, nb, i);
    unsigned __int128 r = av - bv - borrow;
    dst[i] = static_cast<uint64_t>(r);
    borrow = (bv + borrow > av) ? 1 : 0;
  }
  Mask(dst, nd, width);
}

void Mul(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  uint32_t nw = WordsFor(width);
  std::vector<uint64_t> acc(nw, 0);
  uint32_t la = std::min(na, nw);
  uint32_t lb = std::min(nb, nw);
  for (uint32_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    unsigned __int128 carry = 0;
    for (uint32_t j = 0; j + i < nw; ++j) {
      unsigned __int128 cur = acc[i + j];
      cur += carry;
      if (j < lb) {
        cur += static_cast<unsigned __int128>(a[i]) * b[j];
      } else if (carry == 0) {
        acc[i + j] = static_cast<uint64_t>(cur);
        break;
      }
      acc[i + j] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
  }
  for (uint32_t i = 0; i < nd; ++i) dst[i] = i < nw ? acc[i] : 0;
  Mask(dst, nd, width);
}

namespace {

// Restoring shift-subtract division over `width` bits.
void DivModImpl(const uint64_t* a, uint32_t na, const uint64_t* b, uint32_t nb,
                uint32_t width, std::vector<uint64_t>* quot,
                std::vector<uint64_t>* rem) {
  uint32_t nw = WordsFor(width);
  quot->assign(nw, 0);
  rem->assign(nw, 0);
  if (IsZero(b, nb)) return;
  auto bit_of = [&](const uint64_t* p, uint32_t np, uint32_t i) -> uint64_t {
    return (Get(p, np, i / 64) >> (i % 64)) & 1ull;
  };
  std::vector<uint64_t>& r = *rem;
  for (int i = static_cast<int>(width) - 1; i >= 0; --i) {
    // r = (r << 1) | a[i]
    uint64_t carry = bit_of(a, na, static_cast<uint32_t>(i));
    for (uint32_t w = 0; w < nw; ++w) {
      uint64_t next = r[w] >> 63;
      r[w] = (r[w] << 1) | carry;
      carry = next;
    }
    Mask(r.data(), nw, width);
    // if r >= b: r -= b; q[i] = 1
    if (Compare(r.data(), nw, b, nb) >= 0) {
      Sub(r.data(), nw, r.data(), nw, b, nb, width);
      (*quot)[static_cast<uint32_t>(i) / 64] |= 1ull
                                               << (static_cast<uint32_t>(i) % 64);
    }
  }
}

}  // namespace

void Div(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  std::vector<uint64_t> q, r;
  DivModImpl(a, na, b, nb, width, &q, &r);
  for (uint32_t i = 0; i < nd; ++i) dst[i] = i < q.size() ? q[i] : 0;
  Mask(dst, nd, width);
}

void Mod(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         const uint64_t* b, uint32_t nb, uint32_t width) {
  std::vector<uint64_t> q, r;
  DivModImpl(a, na, b, nb, width, &q, &r);
  for (uint32_t i = 0; i < nd; ++i) dst[i] = i < r.size() ? r[i] : 0;
  Mask(dst, nd, width);
}

int Compare(const uint64_t* a, uint32_t na, const uint64_t* b, uint32_t nb) {
  uint32_t n = std::max(na, nb);
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    uint64_t av = Get(a, na, static_cast<uint32_t>(i));
    uint64_t bv = Get(b, nb, static_cast<uint32_t>(i));
    if (av != bv) return av < bv ? -1 : 1;
  }
  return 0;
}

void Shl(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint64_t amount, uint32_t width) {
  if (amount >= width) {
    for (uint32_t i = 0; i < nd; ++i) dst[i] = 0;
    return;
  }
  uint32_t word_shift = static_cast<uint32_t>(amount / 64);
  uint32_t bit_shift = static_cast<uint32_t>(amount % 64);
  for (int i = static_cast<int>(nd) - 1; i >= 0; --i) {
    uint32_t ui = static_cast<uint32_t>(i);
    uint64_t lo = ui >= word_shift ? Get(a, na, ui - word_shift) : 0;
    uint64_t hi = ui >= word_shift + 1 ? Get(a, na, ui - word_shift - 1) : 0;
    dst[ui] = bit_shift == 0 ? lo : (lo << bit_shift) | (hi >> (64 - bit_shift));
  }
  Mask(dst, nd, width);
}

void Shr(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
         uint64_t amount, uint32_t width) {
  if (amount >= width) {
    for (uint32_t i = 0; i < nd; ++i) dst[i] = 0;
    return;
  }
  uint32_t word_shift = static_cast<uint32_t>(amount / 64);
  uint32_t bit_shift = static_cast<uint32_t>(amount % 64);
  for (uint32_t i = 0; i < nd; ++i) {
    uint64_t lo = Get(a, na, i + word_shift);
    uint64_t hi = Get(a, na, i + word_shift + 1);
    dst[i] = bit_shift == 0 ? lo : (lo >> bit_shift) | (hi << (64 - bit_shift));
  }
  Mask(dst, nd, width);
}

uint64_t ReduceAnd(const uint64_t* a, uint32_t na, uint32_t width) {
  uint32_t nw = WordsFor(width);
  for (uint32_t i = 0; i + 1 < nw; ++i) {
    if (Get(a, na, i) != ~0ull) return 0;
  }
  return Get(a, na, nw - 1) == TopMask(width) ? 1 : 0;
}

uint64_t ReduceOr(const uint64_t* a, uint32_t na, uint32_t width) {
  uint32_t nw = WordsFor(width);
  for (uint32_t i = 0; i < nw; ++i) {
    if (Get(a, na, i) != 0) return 1;
  }
  return 0;
}

uint64_t ReduceXor(const uint64_t* a, uint32_t na, uint32_t width) {
  uint32_t nw = WordsFor(width);
  uint64_t acc = 0;
  for (uint32_t i = 0; i < nw; ++i) acc ^= Get(a, na, i);
  return __builtin_parityll(acc);
}

void Slice(uint64_t* dst, uint32_t nd, const uint64_t* a, uint32_t na,
           uint32_t lo, uint32_t width) {
  uint32_t word_shift = lo / 64;
  uint32_t bit_shift = lo % 64;
  for (uint32_t i = 0; i < nd; ++i) {
    uint64_t lo_w = Get(a, na, i + word_shift);
    uint64_t hi_w = Get(a, na, i + word_shift + 1);
    dst[i] = bit_shift == 0 ? lo_w
                            : (lo_w >> bit_shift) | (hi_w << (64 - bit_shift));
  }
  Mask(dst, nd, width);
}

void Deposit(uint64_t* dst, uint32_t nd, const uint64_t* src, uint32_t ns,
             uint32_t lo, uint32_t w) {
  for (uint32_t k = 0; k < w; ++k) {
    uint32_t bit = lo + k;
    if (bit >= 64u * nd) break;
    uint64_t v = (Get(src, ns, k / 64) >> (k % 64)) & 1ull;
    uint64_t mask = 1ull << (bit % 64);
    if (v) {
      dst[bit / 64] |= mask;
    } else {
      dst[bit / 64] &= ~mask;
    }
  }
}

uint64_t ShiftAmount(const uint64_t* a, uint32_t na) {
  for (uint32_t i = 1; i < na; ++i) {
    if (a[i] != 0) return 1ull << 32;
  }
  return na > 0 ? a[0] : 0;
}

}  // namespace words

Value::Value(uint32_t width, uint32_t elems, std::vector<uint64_t> raw)
    : width_(width), elems_(elems), storage_(std::move(raw)) {
  storage_.resize(static_cast<size_t>(WordsPerElem()) * elems_, 0);
  for (uint32_t e = 0; e < elems_; ++e) {
    words::Mask(elem(e), WordsPerElem(), width_);
  }
}

Value Value::Parse(uint32_t width, const std::string& text) {
  Value v(width);
  uint32_t nw = v.WordsPerElem();
  std::vector<uint64_t>& w = v.storage_;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    uint32_t bit = 0;
    for (size_t i = text.size(); i > 2; --i) {
      char c = text[i - 1];
      if (c == '_') continue;
      uint64_t d;
      if (c >= '0' && c <= '9') d = static_cast<uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f') d = static_cast<uint64_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') d = static_cast<uint64_t>(c - 'A' + 10);
      else Raise(ErrorKind::kSchema, "bad hex digit in value '" + text + "'");
      for (uint32_t k = 0; k < 4; ++k) {
        uint32_t b = bit + k;
        if (b < 64u * nw && ((d >> k) & 1ull)) w[b / 64] |= 1ull << (b % 64);
      }
      bit += 4;
    }
  } else {
    for (char c : text) {
      if (c == '_') continue;
      if (c < '0' || c > '9') {
        Raise(ErrorKind::kSchema, "bad decimal digit in value '" + text + "'");
      }
      // w = w * 10 + digit
      unsigned __int128 carry = static_cast<unsigned __int128>(c - '0');
      for (uint32_t i = 0; i < nw; ++i) {
        unsigned __int128 cur = static_cast<unsigned __int128>(w[i]) * 10 + carry;
        w[i] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
      }
    }
  }
  words::Mask(w.data(), nw, width);
  return v;
}

bool Value::IsZero() const {
  return words::IsZero(storage_.data(), static_cast<uint32_t>(storage_.size()));
}

bool Value::operator==(const Value& other) const {
  return width_ == other.width_ && elems_ == other.elems_ &&
         storage_ == other.storage_;
}

std::string Value::ToHex() const {
  assert(elems_ == 1);
  std::string out;
  bool significant = false;
  for (int i = static_cast<int>(WordsPerElem()) - 1; i >= 0; --i) {
    for (int nib = 15; nib >= 0; --nib) {
      uint64_t d = (storage_[static_cast<size_t>(i)] >> (nib * 4)) & 0xf;
      if (d != 0) significant = true;
      if (significant) out.push_back("0123456789abcdef"[d]);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::string Value::ToDecimal() const {
  assert(elems_ == 1);
  std::vector<uint64_t> tmp = storage_;
  std::string digits;
  auto all_zero = [&]() {
    for (uint64_t w : tmp) {
      if (w != 0) return false;
    }
    return true;
  };
  if (all_zero()) return "0";
  while (!all_zero()) {
    unsigned __int128 rem = 0;
    for (int i = static_cast<int>(tmp.size()) - 1; i >= 0; --i) {
      unsigned __int128 cur = (rem << 64) | tmp[static_cast<size_t>(i)];
      tmp[static_cast<size_t>(i)] = static_cast<uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  }
  return std::string(digits.rbegin(), digits.rend());
}

std::string Value::ToBinary() const {
  assert(elems_ == 1);
  std::string out(width_, '0');
  for (uint32_t i = 0; i < width_; ++i) {
    uint64_t bit = (storage_[i / 64] >> (i % 64)) & 1ull;
    out[width_ - 1 - i] = bit ? '1' : '0';
  }
  return out;
}

Value Value::WithWidth(uint32_t new_width) const {
  assert(elems_ == 1);
  Value v(new_width);
  words::Copy(v.data(), v.WordsPerElem(), data(),
              static_cast<uint32_t>(storage_.size()), new_width);
  return v;
}

}  // namespace aoc
