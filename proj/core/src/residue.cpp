#include "stdist/residue.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stdist/errors.hpp"

namespace stdist::residue {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> digits(int value, int base, int count) {
  std::vector<int> out(count, 0);
  for (int i = 0; i < count; ++i) {
    out[i] = value % base;
    value /= base;
  }
  return out;
}

int from_digits(const std::vector<int>& d, int base) {
  int value = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) value = value * base + d[i];
  return value;
}

// Multiplication table of F_p[x]/(modulus) for a monic modulus of degree n.
std::vector<int> polynomial_mul_table(int p, int n, const std::vector<int>& modulus) {
  int size = 1;
  for (int i = 0; i < n; ++i) size *= p;
  std::vector<int> table(size * size, 0);
  for (int a = 0; a < size; ++a) {
    const std::vector<int> da = digits(a, p, n);
    for (int b = 0; b < size; ++b) {
      const std::vector<int> db = digits(b, p, n);
      std::vector<int> prod(2 * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int k = 2 * n - 1; k >= n; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * modulus[i]) % p + p) % p;
      }
      prod.resize(n);
      table[a * size + b] = from_digits(prod, p);
    }
  }
  return table;
}

bool has_zero_divisors(const std::vector<int>& mul, int size) {
  for (int a = 1; a < size; ++a)
    for (int b = 1; b < size; ++b)
      if (mul[a * size + b] == 0) return true;
  return false;
}

}  // namespace

Element FiniteFieldPair::base_neg(Element a) const {
  for (Element b = 0; b < q_; ++b)
    if (base_add(a, b) == 0) return b;
  throw ModelError("no additive inverse in k_F");
}

Element FiniteFieldPair::base_inv(Element a) const {
  if (a == 0) throw InvalidArgumentError("inverse of zero in k_F");
  return base_inv_[a];
}

bool FiniteFieldPair::base_is_square(Element a) const {
  if (a == 0) return false;
  for (Element b = 1; b < q_; ++b)
    if (base_mul(b, b) == a) return true;
  return false;
}

Element FiniteFieldPair::add(Element x, Element y) const {
  return base_add(x % q_, y % q_) + q_ * base_add(x / q_, y / q_);
}

Element FiniteFieldPair::neg(Element x) const {
  return base_neg(x % q_) + q_ * base_neg(x / q_);
}

Element FiniteFieldPair::mul(Element x, Element y) const {
  return ext_mul_[x * q_ * q_ + y];
}

Element FiniteFieldPair::inv(Element x) const {
  if (x == 0) throw InvalidArgumentError("inverse of zero in k_E");
  return ext_inv_[x];
}

Element FiniteFieldPair::pow(Element x, std::int64_t e) const {
  Element result = 1;
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteFieldPair build_fields(int p, int n) {
  if (!is_prime(p)) throw InvalidArgumentError("p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 4) throw InvalidArgumentError("n must lie in 1..4");
  int q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (q > 16) throw InvalidArgumentError("q = " + std::to_string(q) + " exceeds the cap of 16");

  FiniteFieldPair f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = q;

  // Base field: least monic irreducible of degree n.
  for (int code = 0; code < q; ++code) {
    std::vector<int> modulus = digits(code, p, n);
    std::vector<int> table = polynomial_mul_table(p, n, modulus);
    if (has_zero_divisors(table, q)) continue;
    modulus.push_back(1);
    f.modulus_base_ = std::move(modulus);
    f.base_mul_ = std::move(table);
    break;
  }
  if (f.modulus_base_.empty()) throw ModelError("no irreducible polynomial of degree n over F_p");

  f.base_add_.assign(q * q, 0);
  for (int a = 0; a < q; ++a) {
    const std::vector<int> da = digits(a, p, n);
    for (int b = 0; b < q; ++b) {
      const std::vector<int> db = digits(b, p, n);
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = (da[i] + db[i]) % p;
      f.base_add_[a * q + b] = from_digits(s, p);
    }
  }
  f.base_inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.base_mul(a, b) == 1) f.base_inv_[a] = b;

  // Extension: least monic X^2 + c1 X + c0 over k_F without roots in k_F.
  for (int code = 0; code < q * q && f.modulus_ext_.empty(); ++code) {
    const int c0 = code % q;
    const int c1 = code / q;
    bool has_root = false;
    for (int t = 0; t < q && !has_root; ++t)
      has_root = f.base_add(f.base_add(f.base_mul(t, t), f.base_mul(c1, t)), c0) == 0;
    if (!has_root) f.modulus_ext_ = {c0, c1, 1};
  }
  if (f.modulus_ext_.empty()) throw ModelError("no irreducible quadratic over k_F");

  const int size = q * q;
  const int c0 = f.modulus_ext_[0];
  const int c1 = f.modulus_ext_[1];
  f.ext_mul_.assign(size * size, 0);
  for (int x = 0; x < size; ++x) {
    const int u1 = x % q, v1 = x / q;
    for (int y = 0; y < size; ++y) {
      const int u2 = y % q, v2 = y / q;
      // (u1 + v1 X)(u2 + v2 X) with X^2 = -c1 X - c0.
      const int vv = f.base_mul(v1, v2);
      const int constant = f.base_add(f.base_mul(u1, u2), f.base_neg(f.base_mul(vv, c0)));
      const int linear = f.base_add(f.base_add(f.base_mul(u1, v2), f.base_mul(u2, v1)),
                                    f.base_neg(f.base_mul(vv, c1)));
      f.ext_mul_[x * size + y] = constant + q * linear;
    }
  }
  if (has_zero_divisors(f.ext_mul_, size)) throw ModelError("k_E multiplication has zero divisors");
  f.ext_inv_.assign(size, 0);
  for (int x = 1; x < size; ++x)
    for (int y = 1; y < size; ++y)
      if (f.ext_mul_[x * size + y] == 1) f.ext_inv_[x] = y;
  return f;
}

namespace {

std::vector<Element> outside_base(const FiniteFieldPair& fields) {
  std::vector<Element> out;
  for (Element x = fields.q(); x < fields.extension_size(); ++x) out.push_back(x);
  return out;
}

}  // namespace

MoveSet affine_square_moves(const FiniteFieldPair& fields) {
  MoveSet set;
  set.name = "x -> a^2 x + b";
  std::set<std::vector<Element>> distinct;
  for (Element a = 1; a < fields.q(); ++a) {
    const Element a2 = fields.base_mul(a, a);
    for (Element b = 0; b < fields.q(); ++b) {
      std::vector<Element> image(fields.extension_size(), -1);
      for (Element x : outside_base(fields)) image[x] = fields.add(fields.mul(a2, x), b);
      distinct.insert(std::move(image));
    }
  }
  set.maps.assign(distinct.begin(), distinct.end());
  return set;
}

MoveSet inversion_moves(const FiniteFieldPair& fields, Element x0) {
  const Element c = twist_constant(fields, x0);
  MoveSet set;
  set.name = "x -> 1/(a^2 x c + b)";
  std::set<std::vector<Element>> distinct;
  for (Element a = 1; a < fields.q(); ++a) {
    const Element a2c = fields.base_mul(fields.base_mul(a, a), c);
    for (Element b = 0; b < fields.q(); ++b) {
      std::vector<Element> image(fields.extension_size(), -1);
      for (Element x : outside_base(fields)) {
        const Element denominator = fields.add(fields.mul(a2c, x), b);
        if (denominator == 0) continue;
        const Element y = fields.inv(denominator);
        if (fields.in_base(y)) continue;
        image[x] = y;
      }
      distinct.insert(std::move(image));
    }
  }
  set.maps.assign(distinct.begin(), distinct.end());
  return set;
}

OrbitReport orbits(const FiniteFieldPair& fields, const std::vector<MoveSet>& move_sets) {
  OrbitReport report;
  for (const MoveSet& m : move_sets) {
    if (!report.moves.empty()) report.moves += " ; ";
    report.moves += m.name;
  }
  // Generated group = connected components of the undirected move graph.
  const int size = fields.extension_size();
  std::vector<std::vector<Element>> adjacency(size);
  for (const MoveSet& m : move_sets) {
    for (const auto& image : m.maps) {
      for (Element x = 0; x < size; ++x) {
        if (image[x] < 0) continue;
        adjacency[x].push_back(image[x]);
        adjacency[image[x]].push_back(x);
      }
    }
  }
  std::vector<bool> seen(size, false);
  for (Element start : outside_base(fields)) {
    if (seen[start]) continue;
    int count = 0;
    std::vector<Element> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const Element x = stack.back();
      stack.pop_back();
      ++count;
      for (Element y : adjacency[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    report.representatives.push_back(start);
    report.orbit_sizes.push_back(count);
  }
  report.orbit_count = static_cast<int>(report.orbit_sizes.size());
  report.elements = size - fields.q();
  return report;
}

OrbitReport affine_square_orbits(const FiniteFieldPair& fields) {
  return orbits(fields, {affine_square_moves(fields)});
}

std::vector<Element> square_roots_of_base(const FiniteFieldPair& fields) {
  std::vector<Element> out;
  for (Element x : outside_base(fields))
    if (fields.in_base(fields.mul(x, x))) out.push_back(x);
  return out;
}

Element select_x0(const FiniteFieldPair& fields) {
  const std::vector<Element> roots = square_roots_of_base(fields);
  if (roots.empty())
    throw ModelError("no x0 outside k_F with x0^2 in k_F (q = " + std::to_string(fields.q()) + ")");
  return roots.front();
}

Element twist_constant(const FiniteFieldPair& fields, Element x0) {
  const Element square = fields.mul(x0, x0);
  if (fields.in_base(x0) || !fields.in_base(square) || square == 0)
    throw InvalidArgumentError("x0 must lie outside k_F with x0^2 in k_F^*");
  return fields.base_inv(square);
}

OrbitReport inversion_closure_orbits(const FiniteFieldPair& fields, std::optional<Element> x0) {
  if (fields.characteristic() == 2) return affine_square_orbits(fields);
  const Element chosen = x0 ? *x0 : select_x0(fields);
  return orbits(fields, {affine_square_moves(fields), inversion_moves(fields, chosen)});
}

FractionIdentityReport verify_fraction_identity(const FiniteFieldPair& fields, Element c,
                                                int samples) {
  if (fields.characteristic() == 2)
    throw InvalidArgumentError("fraction identity check needs odd characteristic");
  FractionIdentityReport report;
  const Element inverse_c = fields.base_inv(c);
  std::vector<Element> roots;
  for (Element x : outside_base(fields))
    if (fields.mul(x, x) == inverse_c) roots.push_back(x);
  if (roots.empty()) throw InvalidArgumentError("1/c has no square root outside k_F");

  int pairs = 0;
  for (Element a = 1; a < fields.q(); ++a) {
    for (Element b = 0; b < fields.q(); ++b) {
      if (samples > 0 && pairs >= samples) return report;
      ++pairs;
      const Element a2 = fields.base_mul(a, a);
      const Element a2c = fields.base_mul(a2, c);
      const Element a4c = fields.base_mul(a2, a2c);
      const Element b2 = fields.base_mul(b, b);
      const Element middle_den = fields.sub(a4c, b2);
      const Element right_den = fields.sub(a2, fields.mul(b2, fields.inv(a2c)));
      if (middle_den == 0 || right_den == 0) {
        ++report.skipped;
        continue;
      }
      for (Element x : roots) {
        const Element a2xc = fields.mul(a2c, x);
        const Element lhs = fields.inv(fields.add(a2xc, b));
        const Element middle = fields.mul(fields.sub(a2xc, b), fields.inv(middle_den));
        const Element right =
            fields.mul(fields.sub(x, fields.mul(b, fields.inv(a2c))), fields.inv(right_den));
        ++report.checked;
        if (lhs != middle || middle != right) ++report.failures;
      }
    }
  }
  return report;
}

NonsquareWitness exists_nonsquare_value(const FiniteFieldPair& fields, Element c) {
  if (fields.characteristic() == 2)
    throw InvalidArgumentError("non-square search needs odd characteristic");
  if (c == 0 || fields.base_is_square(fields.base_inv(c)))
    throw InvalidArgumentError("1/c must be a non-square of k_F");
  for (Element a = 1; a < fields.q(); ++a) {
    const Element a2 = fields.base_mul(a, a);
    const Element a2c = fields.base_mul(a2, c);
    for (Element b = 0; b < fields.q(); ++b) {
      const Element b2 = fields.base_mul(b, b);
      const Element value = fields.base_add(a2, fields.base_neg(fields.base_mul(b2, fields.base_inv(a2c))));
      if (value != 0 && !fields.base_is_square(value)) return NonsquareWitness{a, b, value};
    }
  }
  throw ModelError("no (a, b) makes a^2 - b^2/(a^2 c) a non-square in F_" +
                   std::to_string(fields.q()));
}

MoveAudit audit_moves(const FiniteFieldPair& fields, const MoveSet& moves) {
  MoveAudit audit;
  for (const auto& image : moves.maps) {
    std::set<Element> hit;
    for (Element x = 0; x < fields.extension_size(); ++x) {
      if (image[x] < 0) continue;
      ++audit.applications;
      if (fields.in_base(image[x])) audit.lands_outside_base = false;
      if (!hit.insert(image[x]).second) audit.injective = false;
    }
  }
  return audit;
}

std::string element_to_string(const FiniteFieldPair& fields, Element x) {
  const Element u = x % fields.q();
  const Element v = x / fields.q();
  if (v == 0) return std::to_string(u);
  std::string out = v == 1 ? "X" : std::to_string(v) + "X";
  return u == 0 ? out : std::to_string(u) + "+" + out;
}

}  // namespace stdist::residue
