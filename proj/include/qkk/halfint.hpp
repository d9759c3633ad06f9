#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qkk {

/// Exact element of ½ℤ, stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT: integers embed implicitly

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Integer value; throws if the value is a proper half-integer.
  constexpr int to_int() const {
    if (!is_integer()) throw std::domain_error("HalfInt::to_int on non-integer " + str());
    return twice_ / 2;
  }
  constexpr double to_double() const { return 0.5 * twice_; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator*(int k, HalfInt a) { return from_twice(k * a.twice_); }
  friend constexpr HalfInt operator*(HalfInt a, int k) { return from_twice(k * a.twice_); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

  /// "n" or "n/2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Parses "n", "-n", "n/2" (also accepts "n.5").
  static HalfInt parse(std::string_view text);

private:
  int twice_ = 0;
};

constexpr HalfInt half = HalfInt::from_twice(1);

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// x − y ∈ ℤ.
constexpr bool same_parity(HalfInt x, HalfInt y) { return (x.twice() - y.twice()) % 2 == 0; }

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

inline HalfInt HalfInt::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("not a half-integer: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  auto to_int = [&](std::string_view s) {
    if (s.empty()) throw fail();
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(std::string(s), &pos);
    } catch (const std::exception&) {
      throw fail();
    }
    if (pos != s.size()) throw fail();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (to_int(text.substr(slash + 1)) != 2) throw fail();
    return from_twice(to_int(text.substr(0, slash)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto frac = text.substr(dot + 1);
    bool neg = text.front() == '-';
    int whole = to_int(text.substr(0, dot) == "-" ? "-0" : text.substr(0, dot));
    if (frac == "5") return from_twice(2 * whole + (neg ? -1 : 1));
    if (frac == "0") return HalfInt(whole);
    throw fail();
  }
  return HalfInt(to_int(text));
}

}  // namespace qkk

template <>
struct std::hash<qkk::HalfInt> {
  std::size_t operator()(qkk::HalfInt h) const noexcept { return std::hash<int>{}(h.twice()); }
};
