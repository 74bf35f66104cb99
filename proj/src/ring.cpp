#include "gril/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gril {

const char* err_name(Err e) {
  switch (e) {
    case Err::MixedRings: return "mixed-rings";
    case Err::SizeExceeded: return "size-exceeded";
    case Err::NonHomogeneousGenerator: return "non-homogeneous-generator";
    case Err::ImproperIdeal: return "improper-ideal";
    case Err::GroupMismatch: return "group-mismatch";
    case Err::BadMultiplicativeSet: return "bad-multiplicative-set";
    case Err::AmbientMismatch: return "ambient-mismatch";
    case Err::PredicateNotSatisfied: return "predicate-not-satisfied";
    case Err::NotVnr: return "not-vnr";
    case Err::UnknownCheck: return "unknown-check";
    case Err::ParseError: return "parse-error";
    case Err::ValidationError: return "validation-error";
  }
  return "error";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Vacuous: return "VACUOUS";
  }
  return "?";
}

Limits& default_limits() {
  static Limits lim;
  return lim;
}

RingPresentation RingPresentation::zmod(uint64_t n) {
  RingPresentation p;
  p.kind = Kind::Zmod;
  p.modulus = n;
  return p;
}

RingPresentation RingPresentation::poly(RingPresentation base, std::vector<Elem> lower) {
  RingPresentation p;
  p.kind = Kind::Poly;
  p.base = std::make_shared<RingPresentation>(std::move(base));
  p.degree = static_cast<uint32_t>(lower.size());
  p.lower = std::move(lower);
  return p;
}

RingPresentation RingPresentation::truncated(RingPresentation base, uint32_t t) {
  return poly(std::move(base), std::vector<Elem>(t));
}

RingPresentation RingPresentation::product(std::vector<RingPresentation> factors) {
  RingPresentation p;
  p.kind = Kind::Product;
  p.factors = std::move(factors);
  return p;
}

namespace {

std::vector<uint64_t> distinct_primes(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

int fp_deg(const std::vector<uint64_t>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[static_cast<size_t>(i)]) return i;
  return -1;
}

// gcd(a, b) in F_p[X] has degree zero
bool fp_coprime(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  while (true) {
    int db = fp_deg(b);
    if (db < 0) return fp_deg(a) == 0;
    if (db == 0) return true;
    int da = fp_deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    uint64_t inv = mod_pow(b[static_cast<size_t>(db)], p - 2, p);
    uint64_t c = a[static_cast<size_t>(da)] % p * inv % p;
    for (int i = 0; i <= db; ++i) {
      size_t t = static_cast<size_t>(da - db + i);
      a[t] = (a[t] + p - c * b[static_cast<size_t>(i)] % p) % p;
    }
  }
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_int_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// true when s = "(...)" with the opening paren matching the final one
bool fully_parenthesized(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      --depth;
      if (depth == 0) return i + 1 == s.size();
    }
  }
  return false;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

size_t BasisRing::build(const RingPresentation& p) {
  Node n;
  n.kind = p.kind;
  switch (p.kind) {
    case RingPresentation::Kind::Zmod: {
      if (p.modulus < 2) throw Error(Err::ValidationError, "residue modulus must be at least 2");
      if (p.modulus > 0xffffffffULL)
        throw Error(Err::ValidationError, "residue modulus does not fit a coordinate");
      n.modulus = p.modulus;
      n.width = 1;
      n.prime_factors = distinct_primes(p.modulus);
      break;
    }
    case RingPresentation::Kind::Poly: {
      if (!p.base) throw Error(Err::ValidationError, "polynomial quotient needs a base ring");
      if (p.lower.empty())
        throw Error(Err::ValidationError, "polynomial modulus must have degree at least 1");
      size_t nb = build(*p.base);
      size_t bw = nodes_[nb].width;
      n.base = nb;
      n.degree = static_cast<uint32_t>(p.lower.size());
      n.width = bw * n.degree;
      n.trunc = true;
      for (const Elem& c : p.lower) {
        std::vector<uint32_t> blk(bw, 0);
        if (!c.empty()) {
          if (c.size() != bw)
            throw Error(Err::ValidationError, "modulus coefficient has wrong width");
          for (size_t i = 0; i < bw; ++i)
            blk[i] = static_cast<uint32_t>(c[i] % nodes_[nb].local_moduli[i]);
        }
        for (uint32_t v : blk)
          if (v) n.trunc = false;
        n.lower.push_back(std::move(blk));
      }
      break;
    }
    case RingPresentation::Kind::Product: {
      if (p.factors.empty()) throw Error(Err::ValidationError, "product needs at least one factor");
      n.width = 0;
      for (const RingPresentation& f : p.factors) {
        size_t c = build(f);
        n.children.push_back(c);
        n.width += nodes_[c].width;
      }
      break;
    }
  }
  // node-local modulus pattern, used by span arithmetic
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      n.local_moduli = {n.modulus};
      break;
    case RingPresentation::Kind::Poly:
      for (uint32_t j = 0; j < n.degree; ++j)
        n.local_moduli.insert(n.local_moduli.end(), nodes_[n.base].local_moduli.begin(),
                              nodes_[n.base].local_moduli.end());
      break;
    case RingPresentation::Kind::Product:
      for (size_t c : n.children)
        n.local_moduli.insert(n.local_moduli.end(), nodes_[c].local_moduli.begin(),
                              nodes_[c].local_moduli.end());
      break;
  }
  nodes_.push_back(std::move(n));
  return nodes_.size() - 1;
}

void BasisRing::sig_order(size_t node, size_t offset, std::vector<size_t>& out) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      out.push_back(offset);
      break;
    case RingPresentation::Kind::Poly: {
      size_t bw = nodes_[n.base].width;
      for (uint32_t j = n.degree; j-- > 0;) sig_order(n.base, offset + j * bw, out);
      break;
    }
    case RingPresentation::Kind::Product: {
      size_t off = offset;
      for (size_t c : n.children) {
        sig_order(c, off, out);
        off += nodes_[c].width;
      }
      break;
    }
  }
}

std::vector<std::string> BasisRing::name_rec(size_t node) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      return {"1"};
    case RingPresentation::Kind::Poly: {
      std::vector<std::string> base = name_rec(n.base);
      std::vector<std::string> out;
      for (uint32_t j = 0; j < n.degree; ++j) {
        std::string xj = j == 1 ? "X" : "X^" + std::to_string(j);
        for (const std::string& bn : base) {
          if (j == 0)
            out.push_back(bn);
          else if (bn == "1")
            out.push_back(xj);
          else
            out.push_back(bn + "*" + xj);
        }
      }
      return out;
    }
    case RingPresentation::Kind::Product: {
      std::vector<std::string> out;
      for (size_t i = 0; i < n.children.size(); ++i)
        for (const std::string& cn : name_rec(n.children[i]))
          out.push_back(std::to_string(i) + ":" + cn);
      return out;
    }
  }
  return {};
}

BasisRing::BasisRing(const RingPresentation& pres, const Limits& lim) : pres_(pres) {
  root_ = build(pres_);
  moduli_ = nodes_[root_].local_moduli;
  names_ = name_rec(root_);
  sig_order(root_, 0, sig_);
  strides_.assign(moduli_.size(), 0);
  size_ = 1;
  for (size_t i = sig_.size(); i-- > 0;) {
    size_t slot = sig_[i];
    strides_[slot] = size_;
    if (size_ > lim.max_ring_size / moduli_[slot] + 1) throw Error(Err::SizeExceeded, "ring too large");
    size_ *= moduli_[slot];
    if (size_ > lim.max_ring_size)
      throw Error(Err::SizeExceeded, "ring has " + std::to_string(size_) +
                                         " elements, limit is " + std::to_string(lim.max_ring_size));
  }
  one_ = one_rec(root_);
}

Elem BasisRing::one_rec(size_t node) const {
  const Node& n = nodes_[node];
  Elem out(n.width, 0);
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      out[0] = n.modulus > 1 ? 1 : 0;
      break;
    case RingPresentation::Kind::Poly: {
      Elem b = one_rec(n.base);
      std::copy(b.begin(), b.end(), out.begin());
      break;
    }
    case RingPresentation::Kind::Product: {
      size_t off = 0;
      for (size_t c : n.children) {
        Elem b = one_rec(c);
        std::copy(b.begin(), b.end(), out.begin() + static_cast<long>(off));
        off += nodes_[c].width;
      }
      break;
    }
  }
  return out;
}

Elem BasisRing::zero() const { return Elem(width(), 0); }

void BasisRing::check_width(const Elem& a) const {
  if (a.size() != width()) throw Error(Err::ValidationError, "element has wrong coordinate count");
}

Elem BasisRing::add(const Elem& a, const Elem& b) const {
  check_width(a);
  check_width(b);
  Elem out(width());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) + b[i]) % moduli_[i]);
  return out;
}

Elem BasisRing::sub(const Elem& a, const Elem& b) const {
  check_width(a);
  check_width(b);
  Elem out(width());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) + moduli_[i] - b[i]) % moduli_[i]);
  return out;
}

Elem BasisRing::neg(const Elem& a) const { return sub(zero(), a); }

Elem BasisRing::mul(const Elem& a, const Elem& b) const {
  check_width(a);
  check_width(b);
  Elem out(width(), 0);
  mul_span(root_, a.data(), b.data(), out.data());
  return out;
}

Elem BasisRing::scalar(int64_t k) const {
  Elem out(width(), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (!one_[i]) continue;
    int64_t m = static_cast<int64_t>(moduli_[i]);
    out[i] = static_cast<uint32_t>(((k % m) + m) % m);
  }
  return out;
}

bool BasisRing::is_zero(const Elem& a) const {
  check_width(a);
  for (uint32_t v : a)
    if (v) return false;
  return true;
}

bool BasisRing::zero_span(const uint32_t* a, size_t w) const {
  for (size_t i = 0; i < w; ++i)
    if (a[i]) return false;
  return true;
}

void BasisRing::mul_span(size_t node, const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      out[0] = static_cast<uint32_t>(static_cast<uint64_t>(a[0]) * b[0] % n.modulus);
      break;
    case RingPresentation::Kind::Product: {
      size_t off = 0;
      for (size_t c : n.children) {
        mul_span(c, a + off, b + off, out + off);
        off += nodes_[c].width;
      }
      break;
    }
    case RingPresentation::Kind::Poly: {
      size_t bw = nodes_[n.base].width;
      uint32_t d = n.degree;
      const std::vector<uint64_t>& bm = nodes_[n.base].local_moduli;
      std::vector<uint32_t> acc(static_cast<size_t>(2 * d - 1) * bw, 0);
      std::vector<uint32_t> prod(bw);
      for (uint32_t j = 0; j < d; ++j) {
        if (zero_span(a + j * bw, bw)) continue;
        for (uint32_t k = 0; k < d; ++k) {
          if (zero_span(b + k * bw, bw)) continue;
          mul_span(n.base, a + j * bw, b + k * bw, prod.data());
          uint32_t* blk = acc.data() + static_cast<size_t>(j + k) * bw;
          for (size_t i = 0; i < bw; ++i)
            blk[i] = static_cast<uint32_t>((static_cast<uint64_t>(blk[i]) + prod[i]) % bm[i]);
        }
      }
      // fold X^m, m >= d, using X^d = -(c_{d-1} X^{d-1} + ... + c_0)
      for (uint32_t m = 2 * d - 2; m >= d && m < 2 * d; --m) {
        uint32_t* src = acc.data() + static_cast<size_t>(m) * bw;
        if (zero_span(src, bw)) continue;
        if (!n.trunc) {
          for (uint32_t j = 0; j < d; ++j) {
            if (zero_span(n.lower[j].data(), bw)) continue;
            mul_span(n.base, src, n.lower[j].data(), prod.data());
            uint32_t* dst = acc.data() + static_cast<size_t>(m - d + j) * bw;
            for (size_t i = 0; i < bw; ++i)
              dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(dst[i]) + bm[i] - prod[i]) % bm[i]);
          }
        }
        std::fill(src, src + bw, 0);
      }
      std::copy(acc.begin(), acc.begin() + static_cast<long>(static_cast<size_t>(d) * bw), out);
      break;
    }
  }
}

uint64_t BasisRing::index_of(const Elem& a) const {
  check_width(a);
  uint64_t idx = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= moduli_[i]) throw Error(Err::ValidationError, "coordinate out of range");
    idx += a[i] * strides_[i];
  }
  return idx;
}

Elem BasisRing::element_at(uint64_t idx) const {
  if (idx >= size_) throw Error(Err::ValidationError, "element index out of range");
  Elem out(width());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint32_t>(idx / strides_[i] % moduli_[i]);
  return out;
}

int BasisRing::unit_rec(size_t node, const uint32_t* a) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      return std::gcd(static_cast<uint64_t>(a[0]), n.modulus) == 1 ? 1 : 0;
    case RingPresentation::Kind::Product: {
      int res = 1;
      size_t off = 0;
      for (size_t c : n.children) {
        int r = unit_rec(c, a + off);
        if (r == 0) return 0;
        if (r == -1) res = -1;
        off += nodes_[c].width;
      }
      return res;
    }
    case RingPresentation::Kind::Poly: {
      // X is nilpotent in a truncation, so only the constant term decides
      if (n.trunc) return unit_rec(n.base, a);
      if (nodes_[n.base].kind == RingPresentation::Kind::Zmod) {
        uint64_t mod = nodes_[n.base].modulus;
        for (uint64_t p : nodes_[n.base].prime_factors) {
          std::vector<uint64_t> ap(n.degree), fp(n.degree + 1);
          for (uint32_t j = 0; j < n.degree; ++j) {
            ap[j] = a[j] % p;
            fp[j] = n.lower[j][0] % p;
          }
          fp[n.degree] = 1;
          (void)mod;
          if (!fp_coprime(ap, fp, p)) return 0;
        }
        return 1;
      }
      return -1;
    }
  }
  return -1;
}

bool BasisRing::is_unit(const Elem& a) const {
  check_width(a);
  int r = unit_rec(root_, a.data());
  if (r >= 0) return r == 1;
  return is_unit_scan(a);
}

bool BasisRing::is_unit_scan(const Elem& a) const {
  check_width(a);
  for (uint64_t i = 0; i < size_; ++i)
    if (mul(a, element_at(i)) == one_) return true;
  return false;
}

bool BasisRing::is_idempotent(const Elem& a) const { return mul(a, a) == a; }

bool BasisRing::is_nilpotent(const Elem& a) const {
  Elem x = a;
  uint64_t reach = 1;
  while (true) {
    if (is_zero(x)) return true;
    if (reach >= size_) return false;
    x = mul(x, x);
    reach *= 2;
  }
}

std::vector<uint64_t> BasisRing::annihilator(const Elem& a) const {
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < size_; ++i)
    if (is_zero(mul(a, element_at(i)))) out.push_back(i);
  return out;
}

ElemClass BasisRing::classify_element(const Elem& a) const {
  ElemClass c;
  c.unit = is_unit(a);
  c.idempotent = is_idempotent(a);
  c.nilpotent = is_nilpotent(a);
  bool regular = true;
  for (uint64_t i = 0; i < size_ && regular; ++i) {
    Elem b = element_at(i);
    if (!is_zero(b) && is_zero(mul(a, b))) regular = false;
  }
  c.regular = regular;
  c.zero_divisor = !regular;
  return c;
}

std::string BasisRing::show_rec(size_t node, const uint32_t* a) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      return std::to_string(a[0]);
    case RingPresentation::Kind::Product: {
      std::string out = "(";
      size_t off = 0;
      for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ", ";
        out += show_rec(n.children[i], a + off);
        off += nodes_[n.children[i]].width;
      }
      return out + ")";
    }
    case RingPresentation::Kind::Poly: {
      size_t bw = nodes_[n.base].width;
      std::string out;
      for (uint32_t j = 0; j < n.degree; ++j) {
        if (zero_span(a + j * bw, bw)) continue;
        std::string c = show_rec(n.base, a + j * bw);
        std::string term;
        if (j == 0) {
          term = c;
        } else {
          std::string xj = j == 1 ? "X" : "X^" + std::to_string(j);
          if (c == "1") {
            term = xj;
          } else {
            if (c.find(' ') != std::string::npos && c.front() != '(') c = "(" + c + ")";
            term = c + "*" + xj;
          }
        }
        if (!out.empty()) out += " + ";
        out += term;
      }
      return out.empty() ? "0" : out;
    }
  }
  return "";
}

std::string BasisRing::show(const Elem& a) const {
  check_width(a);
  return show_rec(root_, a.data());
}

Elem BasisRing::scalar_node(size_t node, int64_t k) const {
  const Node& n = nodes_[node];
  Elem one = node == root_ ? one_ : one_rec(node);
  Elem out(n.width, 0);
  for (size_t i = 0; i < n.width; ++i) {
    if (!one[i]) continue;
    int64_t m = static_cast<int64_t>(n.local_moduli[i]);
    out[i] = static_cast<uint32_t>(((k % m) + m) % m);
  }
  return out;
}

Elem BasisRing::parse_rec(size_t node, const std::string& raw) const {
  const Node& n = nodes_[node];
  std::string s = trim(raw);
  if (s.empty()) throw Error(Err::ParseError, "empty element literal");
  if (n.kind != RingPresentation::Kind::Product && fully_parenthesized(s))
    return parse_rec(node, s.substr(1, s.size() - 2));
  if (is_int_literal(s)) return scalar_node(node, std::stoll(s));
  switch (n.kind) {
    case RingPresentation::Kind::Zmod:
      throw Error(Err::ParseError, "expected an integer, got '" + s + "'");
    case RingPresentation::Kind::Product: {
      if (!fully_parenthesized(s))
        throw Error(Err::ParseError, "expected a tuple '(a, b, ...)', got '" + s + "'");
      std::vector<std::string> parts = split_top(s.substr(1, s.size() - 2), ',');
      if (parts.size() != n.children.size())
        throw Error(Err::ParseError, "tuple has " + std::to_string(parts.size()) +
                                         " entries, ring has " + std::to_string(n.children.size()) +
                                         " factors");
      Elem out;
      for (size_t i = 0; i < parts.size(); ++i) {
        Elem c = parse_rec(n.children[i], parts[i]);
        out.insert(out.end(), c.begin(), c.end());
      }
      return out;
    }
    case RingPresentation::Kind::Poly: {
      size_t bw = nodes_[n.base].width;
      // X as a ring element; for degree 1 it collapses to -c_0
      Elem xelem(n.width, 0);
      if (n.degree >= 2) {
        Elem ob = one_rec(n.base);
        std::copy(ob.begin(), ob.end(), xelem.begin() + static_cast<long>(bw));
      } else {
        for (size_t i = 0; i < bw; ++i)
          xelem[i] = static_cast<uint32_t>((n.local_moduli[i] - n.lower[0][i]) % n.local_moduli[i]);
      }
      Elem acc(n.width, 0);
      // split into signed terms at depth zero
      std::vector<std::pair<int, std::string>> terms;
      int depth = 0;
      int sign = 1;
      size_t start = 0;
      auto flush = [&](size_t end) {
        std::string t = trim(s.substr(start, end - start));
        if (!t.empty()) terms.emplace_back(sign, t);
      };
      for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
          size_t p = i;
          while (p > 0 && std::isspace(static_cast<unsigned char>(s[p - 1]))) --p;
          char prev = p > 0 ? s[p - 1] : '\0';
          if (i > start || prev == '\0') {
            if (prev != '*' && prev != '^' && prev != '+' && prev != '-' && prev != '(') {
              flush(i);
              sign = ch == '-' ? -1 : 1;
              start = i + 1;
            }
          } else if (i == start && ch == '-') {
            sign = -sign;
            start = i + 1;
          } else if (i == start && ch == '+') {
            start = i + 1;
          }
        }
      }
      flush(s.size());
      if (terms.empty()) throw Error(Err::ParseError, "empty element literal");
      for (auto& [sg, term] : terms) {
        std::string coeff_str;
        uint32_t power = 0;
        std::vector<std::string> star = split_top(term, '*');
        std::string last = trim(star.back());
        auto parse_x = [&](const std::string& x) -> std::optional<uint32_t> {
          if (x == "X") return 1u;
          if (x.rfind("X^", 0) == 0 && is_int_literal(x.substr(2)) && x[2] != '-')
            return static_cast<uint32_t>(std::stoul(x.substr(2)));
          return std::nullopt;
        };
        std::optional<uint32_t> px = parse_x(last);
        if (px) {
          power = *px;
          star.pop_back();
          if (star.empty())
            coeff_str = "1";
          else {
            coeff_str = star[0];
            for (size_t i = 1; i < star.size(); ++i) coeff_str += "*" + star[i];
          }
        } else {
          coeff_str = term;
        }
        std::string cs = trim(coeff_str);
        if (fully_parenthesized(cs) && n.base != root_ &&
            nodes_[n.base].kind != RingPresentation::Kind::Product)
          cs = trim(cs.substr(1, cs.size() - 2));
        Elem coeff_base = parse_rec(n.base, cs);
        Elem termval(n.width, 0);
        std::copy(coeff_base.begin(), coeff_base.end(), termval.begin());
        for (uint32_t k = 0; k < power; ++k) {
          Elem next(n.width, 0);
          mul_span(node, termval.data(), xelem.data(), next.data());
          termval = next;
        }
        for (size_t i = 0; i < n.width; ++i) {
          uint64_t v = sg > 0 ? termval[i] : (n.local_moduli[i] - termval[i]) % n.local_moduli[i];
          acc[i] = static_cast<uint32_t>((acc[i] + v) % n.local_moduli[i]);
        }
      }
      return acc;
    }
  }
  throw Error(Err::ParseError, "cannot parse '" + s + "'");
}

Elem BasisRing::parse(const std::string& text) const { return parse_rec(root_, text); }

std::string presentation_name(const RingPresentation& p) {
  switch (p.kind) {
    case RingPresentation::Kind::Zmod:
      return "Z_" + std::to_string(p.modulus);
    case RingPresentation::Kind::Poly: {
      std::string mod = "X^" + std::to_string(p.lower.size());
      if (p.lower.size() == 1) mod = "X";
      for (size_t j = p.lower.size(); j-- > 0;) {
        const Elem& c = p.lower[j];
        bool zero = true;
        for (uint32_t v : c)
          if (v) zero = false;
        if (zero) continue;
        std::string cs;
        if (c.size() == 1) {
          cs = std::to_string(c[0]);
        } else {
          cs = "(";
          for (size_t i = 0; i < c.size(); ++i) cs += (i ? "," : "") + std::to_string(c[i]);
          cs += ")";
        }
        if (j == 0)
          mod += " + " + cs;
        else if (j == 1)
          mod += " + " + (cs == "1" ? "X" : cs + "*X");
        else
          mod += " + " + (cs == "1" ? "" : cs + "*") + "X^" + std::to_string(j);
      }
      return presentation_name(*p.base) + "[X]/(" + mod + ")";
    }
    case RingPresentation::Kind::Product: {
      std::string out;
      for (size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += " x ";
        std::string f = presentation_name(p.factors[i]);
        if (p.factors[i].kind == RingPresentation::Kind::Product) f = "(" + f + ")";
        out += f;
      }
      return out;
    }
  }
  return "?";
}

std::optional<std::string> check_ring_axioms(const BasisRing& r, uint64_t sample_cap) {
  std::vector<uint64_t> sample;
  if (r.size() <= sample_cap) {
    for (uint64_t i = 0; i < r.size(); ++i) sample.push_back(i);
  } else {
    for (uint64_t i = 0; i < sample_cap / 2; ++i) sample.push_back(i);
    uint64_t stride = r.size() / (sample_cap / 2);
    for (uint64_t i = 0; i < sample_cap / 2; ++i) sample.push_back(i * stride + stride / 2);
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  }
  std::vector<Elem> el;
  el.reserve(sample.size());
  for (uint64_t i : sample) el.push_back(r.element_at(i));

  uint64_t unary_cap = 200000;
  uint64_t unary_n = std::min(r.size(), unary_cap);
  for (uint64_t i = 0; i < unary_n; ++i) {
    Elem a = r.element_at(i);
    if (r.add(a, r.zero()) != a) return "additive identity fails at " + r.show(a);
    if (r.mul(a, r.one()) != a) return "multiplicative identity fails at " + r.show(a);
    if (!r.is_zero(r.add(a, r.neg(a)))) return "additive inverse fails at " + r.show(a);
  }
  for (const Elem& a : el)
    for (const Elem& b : el) {
      if (r.add(a, b) != r.add(b, a))
        return "addition not commutative at (" + r.show(a) + ", " + r.show(b) + ")";
      if (r.mul(a, b) != r.mul(b, a))
        return "multiplication not commutative at (" + r.show(a) + ", " + r.show(b) + ")";
    }
  for (const Elem& a : el)
    for (const Elem& b : el)
      for (const Elem& c : el) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return "addition not associative at (" + r.show(a) + ", " + r.show(b) + ", " + r.show(c) + ")";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return "multiplication not associative at (" + r.show(a) + ", " + r.show(b) + ", " +
                 r.show(c) + ")";
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return "distributivity fails at (" + r.show(a) + ", " + r.show(b) + ", " + r.show(c) + ")";
      }
  return std::nullopt;
}

}  // namespace gril
