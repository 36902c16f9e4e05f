#include "tjl/stream.hpp"

#include <numeric>
#include <stdexcept>

namespace tjl {

namespace {

size_t lcm_size(size_t a, size_t b) { return std::lcm(a, b); }

// common form: prefix length max(p1,p2), loop length lcm(q1,q2)
struct Aligned {
  std::vector<bool> pa, pb;  // prefixes
  std::vector<bool> la, lb;  // loops
};

Aligned align(const Upb& a, const Upb& b) {
  size_t p = std::max(a.prefix_size(), b.prefix_size());
  size_t q = lcm_size(a.loop_size(), b.loop_size());
  Aligned r;
  r.pa.reserve(p);
  r.pb.reserve(p);
  for (size_t n = 0; n < p; ++n) {
    r.pa.push_back(a.at(n));
    r.pb.push_back(b.at(n));
  }
  r.la.reserve(q);
  r.lb.reserve(q);
  for (size_t k = 0; k < q; ++k) {
    r.la.push_back(a.at(p + k));
    r.lb.push_back(b.at(p + k));
  }
  return r;
}

}  // namespace

Upb::Upb(std::vector<bool> prefix, std::vector<bool> loop)
    : prefix_(std::move(prefix)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("Upb loop must be non-empty");
}

bool Upb::at(size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return loop_[(n - prefix_.size()) % loop_.size()];
}

Upb Upb::normalized() const {
  // minimal period: smallest divisor d of q with loop d-periodic
  size_t q = loop_.size();
  size_t d = q;
  for (size_t cand = 1; cand < q; ++cand) {
    if (q % cand != 0) continue;
    bool ok = true;
    for (size_t i = cand; i < q && ok; ++i) ok = loop_[i] == loop_[i % cand];
    if (ok) {
      d = cand;
      break;
    }
  }
  std::vector<bool> loop(loop_.begin(), loop_.begin() + d);
  std::vector<bool> prefix = prefix_;
  // absorb prefix tail bits that the (rotated) loop already produces
  while (!prefix.empty() && prefix.back() == loop.back()) {
    prefix.pop_back();
    bool last = loop.back();
    loop.pop_back();
    loop.insert(loop.begin(), last);
  }
  return Upb(std::move(prefix), std::move(loop));
}

bool Upb::is_constant(bool v) const {
  for (bool x : prefix_)
    if (x != v) return false;
  for (bool x : loop_)
    if (x != v) return false;
  return true;
}

bool Upb::operator==(const Upb& o) const { return upb_equal(*this, o); }

bool upb_equal(const Upb& a, const Upb& b) {
  Upb na = a.normalized();
  Upb nb = b.normalized();
  return na.prefix() == nb.prefix() && na.loop() == nb.loop();
}

namespace {

template <typename F>
Upb pointwise(const Upb& a, const Upb& b, F f) {
  Aligned al = align(a, b);
  std::vector<bool> prefix(al.pa.size()), loop(al.la.size());
  for (size_t i = 0; i < prefix.size(); ++i) prefix[i] = f(al.pa[i], al.pb[i]);
  for (size_t i = 0; i < loop.size(); ++i) loop[i] = f(al.la[i], al.lb[i]);
  return Upb(std::move(prefix), std::move(loop)).normalized();
}

}  // namespace

Upb complement(const Upb& a) {
  std::vector<bool> prefix(a.prefix().size()), loop(a.loop().size());
  for (size_t i = 0; i < prefix.size(); ++i) prefix[i] = !a.prefix()[i];
  for (size_t i = 0; i < loop.size(); ++i) loop[i] = !a.loop()[i];
  return Upb(std::move(prefix), std::move(loop)).normalized();
}

Upb conj(const Upb& a, const Upb& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}
Upb disj(const Upb& a, const Upb& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}
Upb implies(const Upb& a, const Upb& b) {
  return pointwise(a, b, [](bool x, bool y) { return !x || y; });
}

Upb next(const Upb& a) {
  std::vector<bool> prefix = a.prefix();
  std::vector<bool> loop = a.loop();
  if (!prefix.empty()) {
    prefix.erase(prefix.begin());
  } else {
    // rotate loop left
    bool first = loop.front();
    loop.erase(loop.begin());
    loop.push_back(first);
  }
  return Upb(std::move(prefix), std::move(loop)).normalized();
}

Upb wprev(const Upb& a) {
  std::vector<bool> prefix;
  prefix.reserve(a.prefix().size() + 1);
  prefix.push_back(true);
  prefix.insert(prefix.end(), a.prefix().begin(), a.prefix().end());
  return Upb(std::move(prefix), a.loop()).normalized();
}

Upb sprev(const Upb& a) {
  std::vector<bool> prefix;
  prefix.reserve(a.prefix().size() + 1);
  prefix.push_back(false);
  prefix.insert(prefix.end(), a.prefix().begin(), a.prefix().end());
  return Upb(std::move(prefix), a.loop()).normalized();
}

Upb until(const Upb& a, const Upb& b) {
  Aligned al = align(a, b);
  size_t p = al.pa.size();
  size_t q = al.la.size();
  // least fixpoint of U(i) = b(i) | (a(i) & U(i+1 mod q)) on the loop:
  // iterate backward sweeps from all-false until stable (at most q+1 sweeps)
  std::vector<bool> uloop(q, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = q; k-- > 0;) {
      bool v = al.lb[k] || (al.la[k] && uloop[(k + 1) % q]);
      if (v != uloop[k]) {
        uloop[k] = v;
        changed = true;
      }
    }
  }
  // back-propagate through the prefix
  std::vector<bool> uprefix(p, false);
  bool succ = uloop.empty() ? false : uloop[0];
  for (size_t k = p; k-- > 0;) {
    uprefix[k] = al.pb[k] || (al.pa[k] && succ);
    succ = uprefix[k];
  }
  return Upb(std::move(uprefix), std::move(uloop)).normalized();
}

Upb since(const Upb& a, const Upb& b) {
  Aligned al = align(a, b);
  size_t p = al.pa.size();
  size_t q = al.la.size();
  // forward recurrence S(0)=b(0), S(n)=b(n) | (a(n) & S(n-1)). Over one full
  // loop traversal the state map is monotone on {0,1}, hence constant or the
  // identity; after p+q steps the values are q-periodic.
  std::vector<bool> out;
  out.reserve(p + 2 * q);
  bool s = false;
  for (size_t n = 0; n < p + 2 * q; ++n) {
    bool bn = n < p ? al.pb[n] : al.lb[(n - p) % q];
    bool an = n < p ? al.pa[n] : al.la[(n - p) % q];
    s = bn || (an && n > 0 && s);
    out.push_back(s);
  }
  std::vector<bool> prefix(out.begin(), out.begin() + p + q);
  std::vector<bool> loop(out.begin() + p + q, out.end());
  return Upb(std::move(prefix), std::move(loop)).normalized();
}

Upb diamond(const Upb& a) { return until(Upb::constant(true), a); }
Upb box(const Upb& a) { return complement(diamond(complement(a))); }
Upb diamondminus(const Upb& a) { return since(Upb::constant(true), a); }
Upb boxminus(const Upb& a) { return complement(diamondminus(complement(a))); }

bool pointwise_le(const Upb& a, const Upb& b) {
  size_t p = std::max(a.prefix_size(), b.prefix_size());
  size_t q = lcm_size(a.loop_size(), b.loop_size());
  for (size_t n = 0; n < p + q; ++n) {
    if (a.at(n) && !b.at(n)) return false;
  }
  return true;
}

}  // namespace tjl
