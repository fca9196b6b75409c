#include "cpl/constructions.hpp"

#include <algorithm>
#include <cctype>

#include "cpl/numeric.hpp"

namespace cpl {

namespace {

void check_guard(std::uint64_t order, std::size_t max_order,
                 const std::string& what) {
  if (order > max_order)
    throw OrderGuardExceeded(what + ": order " + std::to_string(order) +
                             " exceeds guard " + std::to_string(max_order));
}

void check_prime(int p, const std::string& what) {
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw Error(what + ": " + std::to_string(p) + " is not prime");
  if (p > 31) throw Error(what + ": primes above 31 are not accepted");
}

// Right regular representation of a Cayley table: g acts by x -> table[x][g].
// With the library's "apply left first" orientation this is a homomorphism.
Group from_cayley(const std::vector<std::vector<int>>& table,
                  const std::vector<int>& generator_indices,
                  const std::string& name) {
  const int n = static_cast<int>(table.size());
  std::vector<Permutation> perms;
  perms.reserve(n);
  for (int g = 0; g < n; ++g) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = table[x][g];
    perms.emplace_back(std::move(images));
  }
  std::vector<Permutation> gens;
  for (int g : generator_indices) gens.push_back(perms[g]);
  return Group::from_elements(n, std::move(perms), std::move(gens), name);
}

}  // namespace

Group cyclic(int n, std::size_t max_order) {
  if (n < 1) throw Error("cyclic: n must be >= 1");
  check_guard(n, max_order, "cyclic");
  if (n == 1)
    return Group::from_elements(1, {Permutation(1)}, {}, "C1");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Group::from_generators(n, {Permutation(std::move(images))},
                                "C" + std::to_string(n), max_order);
}

Group dihedral(int n, std::size_t max_order) {
  if (n < 3) throw Error("dihedral: n must be >= 3 (order is 2n)");
  check_guard(2ull * n, max_order, "dihedral");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group::from_generators(
      n, {Permutation(std::move(rot)), Permutation(std::move(refl))},
      "D" + std::to_string(n), max_order);
}

Group symmetric(int n, std::size_t max_order) {
  if (n < 1) throw Error("symmetric: n must be >= 1");
  if (n == 1) {
    Group g = cyclic(1, max_order);
    g.rename("S1");
    return g;
  }
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_guard(fact, max_order, "symmetric");
  std::vector<Permutation> gens;
  std::vector<int> swap01(n);
  for (int i = 0; i < n; ++i) swap01[i] = i;
  swap01[0] = 1;
  swap01[1] = 0;
  gens.emplace_back(std::move(swap01));
  if (n > 2) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.emplace_back(std::move(cyc));
  }
  return Group::from_generators(n, std::move(gens), "S" + std::to_string(n),
                                max_order);
}

Group quaternion8() {
  // Units encoded as 2*axis + (sign < 0), axis 0..3 = 1, i, j, k.
  auto mul = [](int x, int y) {
    static const int axis[4][4] = {  // axis of product, 0 means +/-1
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {  // +1 or -1 contributed by the axes
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int ax = x / 2, sx = x % 2 ? -1 : 1;
    int ay = y / 2, sy = y % 2 ? -1 : 1;
    int a = axis[ax][ay];
    int s = sx * sy * sign[ax][ay];
    return 2 * a + (s < 0 ? 1 : 0);
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) table[x][y] = mul(x, y);
  return from_cayley(table, {2, 4}, "Q8");  // generated by i and j
}

Group extraspecial_p_cubed(int p, ExtraspecialType type,
                           std::size_t max_order) {
  check_prime(p, "extraspecial_p_cubed");
  const std::string name =
      "ES(" + std::to_string(p) +
      (type == ExtraspecialType::exponent_p ? ",+)" : ",-)");
  check_guard(static_cast<std::uint64_t>(p) * p * p, max_order,
              "extraspecial_p_cubed");
  if (p == 2) {
    // The two nonabelian groups of order 8.
    Group g = type == ExtraspecialType::exponent_p ? dihedral(4, max_order)
                                                   : quaternion8();
    g.rename(name);
    return g;
  }
  const int n = p * p * p;
  std::vector<std::vector<int>> table;
  std::vector<int> gens;
  if (type == ExtraspecialType::exponent_p) {
    // Heisenberg group mod p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    table.assign(n, std::vector<int>(n));
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          for (int a2 = 0; a2 < p; ++a2)
            for (int b2 = 0; b2 < p; ++b2)
              for (int c2 = 0; c2 < p; ++c2)
                table[idx(a, b, c)][idx(a2, b2, c2)] =
                    idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    gens = {idx(1, 0, 0), idx(0, 1, 0)};
  } else {
    // Metacyclic C_{p^2} : C_p with b^-1 a b = a^{1+p}:
    // (i,j)(i',j') = (i + i'(1+p)^j mod p^2, j+j').
    const int pp = p * p;
    std::vector<int> pw(p);  // (1+p)^j mod p^2
    pw[0] = 1;
    for (int j = 1; j < p; ++j) pw[j] = (pw[j - 1] * (1 + p)) % pp;
    auto idx = [p](int i, int j) { return i * p + j; };
    table.assign(n, std::vector<int>(n));
    for (int i = 0; i < pp; ++i)
      for (int j = 0; j < p; ++j)
        for (int i2 = 0; i2 < pp; ++i2)
          for (int j2 = 0; j2 < p; ++j2)
            table[idx(i, j)][idx(i2, j2)] =
                idx((i + i2 * pw[j]) % pp, (j + j2) % p);
    gens = {idx(1, 0), idx(0, 1)};
  }
  return from_cayley(table, gens, name);
}

Group direct_product(const Group& g, const Group& h, std::size_t max_order) {
  check_guard(static_cast<std::uint64_t>(g.order()) * h.order(), max_order,
              "direct_product");
  const int dg = g.degree(), dh = h.degree();
  auto combine = [&](const Permutation& x, const Permutation& y) {
    std::vector<int> images(dg + dh);
    for (int i = 0; i < dg; ++i) images[i] = x[i];
    for (int i = 0; i < dh; ++i) images[dg + i] = dg + y[i];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> elems;
  elems.reserve(g.order() * h.order());
  for (const Permutation& x : g.elements())
    for (const Permutation& y : h.elements()) elems.push_back(combine(x, y));
  std::vector<Permutation> gens;
  Permutation idg(dg), idh(dh);
  for (const Permutation& x : g.generators()) gens.push_back(combine(x, idh));
  for (const Permutation& y : h.generators()) gens.push_back(combine(idg, y));
  return Group::from_elements(dg + dh, std::move(elems), std::move(gens),
                              g.name() + " x " + h.name());
}

Group wreath_cyclic(const Group& base, int n, std::size_t max_order) {
  if (n < 1) throw Error("wreath_cyclic: n must be >= 1");
  std::uint64_t order = n;
  for (int i = 0; i < n; ++i) {
    order *= base.order();
    check_guard(order, max_order, "wreath_cyclic");
  }
  const int d = base.degree();
  std::vector<Permutation> gens;
  for (const Permutation& s : base.generators()) {
    std::vector<int> images(n * d);
    for (int i = 0; i < n * d; ++i) images[i] = i;
    for (int j = 0; j < d; ++j) images[j] = s[j];  // base copy in block 0
    gens.emplace_back(std::move(images));
  }
  {
    std::vector<int> rot(n * d);  // cyclic shift of the blocks
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) rot[i * d + j] = ((i + 1) % n) * d + j;
    gens.emplace_back(std::move(rot));
  }
  return Group::from_generators(
      n * d, std::move(gens),
      "wr(" + base.name() + "," + std::to_string(n) + ")", max_order);
}

Group affine_prime(int p, std::size_t max_order) {
  check_prime(p, "affine_prime");
  check_guard(static_cast<std::uint64_t>(p) * (p - 1), max_order,
              "affine_prime");
  const std::string name = "AGL1(" + std::to_string(p) + ")";
  if (p == 2) {
    Group g = cyclic(2, max_order);
    g.rename(name);
    return g;
  }
  // Smallest primitive root mod p.
  int root = 0;
  for (int a = 2; a < p && !root; ++a) {
    int x = a % p, ord = 1;
    while (x != 1) {
      x = x * a % p;
      ++ord;
    }
    if (ord == p - 1) root = a;
  }
  std::vector<int> trans(p), mult(p);
  for (int i = 0; i < p; ++i) {
    trans[i] = (i + 1) % p;
    mult[i] = i * root % p;
  }
  return Group::from_generators(
      p, {Permutation(std::move(trans)), Permutation(std::move(mult))}, name,
      max_order);
}

namespace {

// Recursive-descent parser for the group-spec grammar.
class SpecParser {
 public:
  SpecParser(const std::string& text, std::size_t max_order)
      : text_(text), max_order_(max_order) {}

  GroupSpec parse() {
    auto [rendered, group] = parse_spec();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    group.rename(rendered);
    return GroupSpec{rendered, std::move(group)};
  }

 private:
  std::pair<std::string, Group> parse_spec() {
    auto [rendered, group] = parse_atom();
    for (;;) {
      skip_ws();
      if (!try_consume('x')) break;
      auto [r2, g2] = parse_atom();
      group = direct_product(group, g2, max_order_);
      rendered += " x " + r2;
    }
    return {rendered, std::move(group)};
  }

  std::pair<std::string, Group> parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    if (try_consume_word("wr(")) {
      auto [inner, base] = parse_spec();
      expect(',');
      int n = parse_int();
      expect(')');
      return {"wr(" + inner + "," + std::to_string(n) + ")",
              wreath_cyclic(base, n, max_order_)};
    }
    if (try_consume_word("ES(")) {
      std::size_t p_pos = pos_;
      int p = parse_int();
      if (!is_prime(static_cast<std::uint64_t>(p)) || p > 31)
        throw ParseError("ES(p,...) needs a prime p <= 31", p_pos);
      expect(',');
      skip_ws();
      ExtraspecialType type;
      if (try_consume('+'))
        type = ExtraspecialType::exponent_p;
      else if (try_consume('-'))
        type = ExtraspecialType::exponent_p_squared;
      else
        throw ParseError("expected '+' or '-' in ES(p,+/-)", pos_);
      expect(')');
      return {"ES(" + std::to_string(p) + (type == ExtraspecialType::exponent_p
                                               ? ",+)"
                                               : ",-)"),
              extraspecial_p_cubed(p, type, max_order_)};
    }
    if (try_consume_word("AGL1(")) {
      std::size_t p_pos = pos_;
      int p = parse_int();
      if (!is_prime(static_cast<std::uint64_t>(p)) || p > 31)
        throw ParseError("AGL1(p) needs a prime p <= 31", p_pos);
      expect(')');
      return {"AGL1(" + std::to_string(p) + ")", affine_prime(p, max_order_)};
    }
    if (try_consume_word("Q8")) return {"Q8", quaternion8()};
    if (try_consume('C')) {
      int n = parse_int();
      return {"C" + std::to_string(n), cyclic(n, max_order_)};
    }
    if (try_consume('D')) {
      int n = parse_int();
      return {"D" + std::to_string(n), dihedral(n, max_order_)};
    }
    if (try_consume('S')) {
      int n = parse_int();
      return {"S" + std::to_string(n), symmetric(n, max_order_)};
    }
    throw ParseError("unknown atom", start);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Matches a multi-character keyword, ignoring interior whitespace.
  bool try_consume_word(const std::string& word) {
    std::size_t save = pos_;
    for (char c : word) {
      if (!try_consume(c)) {
        pos_ = save;
        return false;
      }
    }
    return true;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return static_cast<int>(value);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t max_order_;
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text, std::size_t max_order) {
  return SpecParser(text, max_order).parse();
}

std::vector<CatalogEntry> catalog(CatalogProfile profile,
                                  std::size_t max_order) {
  static const char* kSmoke[] = {
      "C1",      "C2",        "C3",       "C4",        "C2 x C2",
      "C6",      "S3",        "D4",       "Q8",        "wr(C2,2)",
      "C3 x C3", "D5",        "D6",       "D8",        "C2 x D4",
      "AGL1(5)", "S4",        "wr(C2,3)", "ES(3,+)",   "ES(3,-)",
      "D16",     "AGL1(7)",   "C2 x ES(3,+)",
  };
  static const char* kFullExtra[] = {
      "AGL1(11)", "ES(5,+)", "ES(5,-)", "wr(wr(C2,2),2)",
      "AGL1(13)", "D4 x ES(3,+)", "D4 x ES(3,+) x ES(5,+)",
  };
  std::vector<CatalogEntry> out;
  // A tightened guard trims the catalog rather than failing it, so --max-order
  // composes with --catalog.
  auto add = [&](const char* s) {
    try {
      GroupSpec spec = parse_group_spec(s, max_order);
      out.push_back({spec.expression, std::move(spec.resolved)});
    } catch (const OrderGuardExceeded&) {
    }
  };
  for (const char* s : kSmoke) add(s);
  if (profile == CatalogProfile::full)
    for (const char* s : kFullExtra) add(s);
  return out;
}

}  // namespace cpl
