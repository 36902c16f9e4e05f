#pragma once

#include <cstddef>
#include <vector>

namespace tjl {

// Ultimately periodic boolean stream: value at n is prefix[n] for n < p,
// otherwise loop[(n - p) mod q]. All operations return normalized results
// (minimal loop period, minimal prefix).
class Upb {
 public:
  Upb() : loop_{false} {}  // constant false
  Upb(std::vector<bool> prefix, std::vector<bool> loop);

  static Upb constant(bool v) { return Upb({}, {v}); }

  bool at(size_t n) const;
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& loop() const { return loop_; }
  size_t prefix_size() const { return prefix_.size(); }
  size_t loop_size() const { return loop_.size(); }

  Upb normalized() const;
  bool is_constant(bool v) const;

  // structural comparison of normalized forms
  bool operator==(const Upb& o) const;
  bool operator!=(const Upb& o) const { return !(*this == o); }

 private:
  std::vector<bool> prefix_;
  std::vector<bool> loop_;
};

bool upb_equal(const Upb& a, const Upb& b);

// pointwise boolean algebra
Upb complement(const Upb& a);
Upb conj(const Upb& a, const Upb& b);
Upb disj(const Upb& a, const Upb& b);
Upb implies(const Upb& a, const Upb& b);

// temporal operators (exact, on the infinite stream)
Upb next(const Upb& a);             // s(n+1)
Upb wprev(const Upb& a);            // true at 0, else s(n-1)
Upb sprev(const Upb& a);            // false at 0, else s(n-1)
Upb until(const Upb& a, const Upb& b);
Upb since(const Upb& a, const Upb& b);
Upb box(const Upb& a);              // all m >= n
Upb diamond(const Upb& a);          // some m >= n
Upb boxminus(const Upb& a);         // all m <= n
Upb diamondminus(const Upb& a);     // some m <= n

// a(n) implies b(n) for every n
bool pointwise_le(const Upb& a, const Upb& b);

}  // namespace tjl
