#include "gonseq/lattice.hpp"

#include <sstream>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

void require_same_surface(const DivisorClass& lhs, const DivisorClass& rhs) {
  if (lhs.n() != rhs.n()) {
    std::ostringstream msg;
    msg << "classes live on different surfaces: F_" << lhs.n() << " vs F_" << rhs.n();
    throw InvalidInput(msg.str());
  }
}

std::string render_pair(Int a, const char* x, Int b, const char* y) {
  std::ostringstream out;
  auto term = [&](Int c, const char* name) {
    if (c == 0) return;
    if (c < 0) out << '-';
    else if (out.tellp() > 0) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << name;
  };
  term(a, x);
  term(b, y);
  if (out.tellp() == 0) out << '0';
  return out.str();
}

} // namespace

DivisorClass::DivisorClass(Int n, Int a, Int b) : n_(n), a_(a), b_(b) {
  if (n < 0) throw InvalidInput("Hirzebruch invariant n must be >= 0");
}

DivisorClass DivisorClass::normalized() const {
  if (n_ == 0 && a_ > b_) return {0, b_, a_};
  return *this;
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_surface(*this, other);
  return {n_, checked::add(a_, other.a_), checked::add(b_, other.b_)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_surface(*this, other);
  return {n_, checked::sub(a_, other.a_), checked::sub(b_, other.b_)};
}

DivisorClass operator*(Int k, const DivisorClass& d) {
  return {d.n_, checked::mul(k, d.a_), checked::mul(k, d.b_)};
}

std::string DivisorClass::to_string() const { return render_pair(a_, "C0", b_, "L"); }

std::string HLClass::to_string() const { return render_pair(h, "H", l, "L"); }

Int intersect(const DivisorClass& lhs, const DivisorClass& rhs) {
  require_same_surface(lhs, rhs);
  const Int self = checked::mul(-lhs.n(), lhs.a(), rhs.a());
  return checked::add(self, checked::add(checked::mul(lhs.a(), rhs.b()), checked::mul(rhs.a(), lhs.b())));
}

DivisorClass canonical_class(Int n) {
  if (n < 0) throw InvalidInput("Hirzebruch invariant n must be >= 0");
  return {n, -2, -checked::add(n, 2)};
}

Int formal_genus(const DivisorClass& x) {
  const Int twice = intersect(canonical_class(x.n()) + x, x);
  // K is characteristic for the intersection form, so (K+X).X is always even.
  if (twice % 2 != 0) throw std::logic_error("odd adjunction value for " + x.to_string());
  return checked::add(twice / 2, 1);
}

Int adjunction_genus(const DivisorClass& x) {
  if (!is_irreducible_smoothable(x)) {
    throw DomainError("no smooth irreducible curve in |" + x.to_string() + "| on F_" +
                      std::to_string(x.n()));
  }
  const Int g = formal_genus(x);
  if (g < 0) throw DomainError("negative genus for " + x.to_string());
  return g;
}

bool is_irreducible_smoothable(const DivisorClass& d) {
  const Int a = d.a();
  const Int b = d.b();
  const Int n = d.n();
  if (a == 0 && b == 1) return true;
  if (a == 1 && b == 0) return true;
  if (a <= 0) return false;
  const Int an = checked::mul(a, n);
  return b > an || (b == an && n > 0);
}

bool is_very_ample(const DivisorClass& d) {
  return d.a() > 0 && d.b() > checked::mul(d.a(), d.n());
}

Int h0_unisecant(Int beta, Int n) {
  if (n < 0 || beta < n) {
    throw InvalidInput("h0(C0 + beta L) needs beta >= n >= 0 (beta=" + std::to_string(beta) +
                       ", n=" + std::to_string(n) + ")");
  }
  return checked::sub(checked::add(checked::mul(2, beta), 2), n);
}

ScrollEmbedding scroll_from_rn(Int r, Int n) {
  if (r < 3) throw InvalidInput("scroll needs r >= 3");
  if (n < 0) throw InvalidInput("Hirzebruch invariant n must be >= 0");
  const Int twice_beta = checked::sub(checked::add(r, n), 1);
  if (twice_beta % 2 != 0) {
    throw InvalidInput("no scroll over F_" + std::to_string(n) + " in P^" + std::to_string(r) +
                       ": r + n - 1 is odd");
  }
  const Int beta = twice_beta / 2;
  if (beta < n) throw InvalidInput("scroll needs beta >= n");
  return {n, beta, r};
}

ScrollEmbedding scroll_from_beta(Int beta, Int n) {
  const Int r = checked::sub(h0_unisecant(beta, n), 1);
  if (r < 3) throw InvalidInput("|C0 + beta L| does not map F_n onto a surface scroll (r < 3)");
  return {n, beta, r};
}

ScrollEmbedding standard_scroll(Int r) { return scroll_from_rn(r, (r % 2 == 0) ? 1 : 0); }

HLClass class_in_HL(const DivisorClass& d, const ScrollEmbedding& s) {
  if (d.n() != s.n()) throw InvalidInput("class and scroll live on different surfaces");
  return {d.a(), checked::sub(d.b(), checked::mul(d.a(), s.beta()))};
}

DivisorClass class_from_HL(const HLClass& c, const ScrollEmbedding& s) {
  return {s.n(), c.h, checked::add(c.l, checked::mul(c.h, s.beta()))};
}

Int intersect_HL(const HLClass& lhs, const HLClass& rhs, Int r) {
  return checked::add(checked::mul(lhs.h, rhs.h, checked::sub(r, 1)),
                      checked::add(checked::mul(lhs.h, rhs.l), checked::mul(rhs.h, lhs.l)));
}

HLClass scroll_canonical_class(Int r) { return {-2, checked::sub(r, 3)}; }

Int degree_HL(const HLClass& c, Int r) { return intersect_HL(c, {1, 0}, r); }

} // namespace gonseq
