#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "group_internal.hpp"

namespace cayley {
namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

GroupTable make_group(std::size_t n, std::vector<Element> mul, std::string label, Family family, std::size_t param) {
  return GroupTable(n, std::move(mul), std::move(label), family, param);
}

GroupTable::GroupTable(std::size_t n, std::vector<Element> mul, std::string label, Family family, std::size_t param)
    : n_(n), mul_(std::move(mul)), label_(std::move(label)), family_(family), family_param_(param) {
  for (Element e = 0; e < n_; ++e) {
    bool ok = true;
    for (Element g = 0; g < n_ && ok; ++g) ok = this->mul(e, g) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(n_, 0);
  for (Element g = 0; g < n_; ++g)
    for (Element h = 0; h < n_; ++h)
      if (this->mul(g, h) == identity_) {
        inverse_[g] = h;
        break;
      }
}

void validate_group_axioms(std::size_t n, const std::vector<Element>& t) {
  if (n == 0) throw std::invalid_argument("group table must have order >= 1");
  if (t.size() != n * n) throw std::invalid_argument("group table must have n*n entries");
  auto at = [&](Element a, Element b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n)
      throw std::invalid_argument("table entry at row " + std::to_string(i / n) + ", column " +
                                  std::to_string(i % n) + " is out of range");

  Element identity = static_cast<Element>(n);
  for (Element e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
    if (ok) identity = e;
  }
  if (identity == n) throw std::invalid_argument("table has no two-sided identity element");

  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h) found = at(g, h) == identity && at(h, g) == identity;
    if (!found) throw std::invalid_argument("element " + std::to_string(g) + " has no two-sided inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (Element c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw std::invalid_argument("associativity fails for triple " + triple(a, b, c));
    }
}

GroupTable GroupTable::from_table(const std::vector<std::vector<Element>>& rows, std::string label) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  validate_group_axioms(n, flat);
  return GroupTable(n, std::move(flat), std::move(label), Family::kOther, 0);
}

GroupTable GroupTable::parse_text(std::istream& in, std::string label) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw std::invalid_argument("table text must start with a positive order");
  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(n));
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x)) throw std::invalid_argument("table text ended early");
      if (x < 0 || x >= n) throw std::invalid_argument("table entry " + std::to_string(x) + " out of range");
      v = static_cast<Element>(x);
    }
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("unexpected trailing token '" + rest + "' in table text");
  return from_table(rows, std::move(label));
}

std::size_t GroupTable::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet GroupTable::all() const {
  ElementSet s(n_);
  for (Element g = 0; g < n_; ++g) s.insert(g);
  return s;
}

ElementSet GroupTable::closure(const std::vector<Element>& gens) const {
  ElementSet reached(n_);
  reached.insert(identity_);
  std::vector<Element> queue{identity_};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element h = queue[head];
    for (Element s : gens) {
      const Element x = mul(h, s);
      if (!reached.contains(x)) {
        reached.insert(x);
        queue.push_back(x);
      }
    }
  }
  return reached;
}

GroupTable GroupTable::with_label(std::string label) const {
  GroupTable copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return make_group(n, std::move(t), "Z" + std::to_string(n), Family::kCyclic, n);
}

GroupTable dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral: n must be positive");
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  auto enc = [&](bool refl, std::size_t i) { return static_cast<Element>((refl ? n : 0) + i % n); };
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const bool rx = x >= n, ry = y >= n;
      const std::size_t i = x % n, j = y % n;
      Element r;
      if (!rx && !ry)
        r = enc(false, i + j);  // a^i a^j
      else if (!rx && ry)
        r = enc(true, j + n - i);  // a^i b a^j = b a^{j-i}
      else if (rx && !ry)
        r = enc(true, i + j);  // b a^i a^j
      else
        r = enc(false, j + n - i);  // b a^i b a^j = a^{j-i}
      t[x * order + y] = r;
    }
  return make_group(order, std::move(t), "D" + std::to_string(n), Family::kDihedral, n);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = g.mul(static_cast<Element>(x / k), static_cast<Element>(y / k));
      const Element b = h.mul(static_cast<Element>(x % k), static_cast<Element>(y % k));
      t[x * n + y] = static_cast<Element>(a * k + b);
    }
  return make_group(n, std::move(t), g.label() + " x " + h.label());
}

GroupTable dicyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dicyclic: n must be positive");
  const std::size_t m = 2 * n, order = 4 * n;
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      // a^i b^j a^k b^l = a^{i + (-1)^j k} b^{j + l}, with b^2 = a^n.
      std::size_t e = (j == 0 ? i + k : i + m - k) % m;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + n) % m;
        f = 0;
      }
      t[x * order + y] = static_cast<Element>(e + m * f);
    }
  return make_group(order, std::move(t), "Dic" + std::to_string(n));
}

GroupTable semidirect_cyclic(const GroupTable& normal, std::size_t k, const Automorphism& phi, std::string label) {
  const std::size_t m = normal.order();
  if (k == 0) throw std::invalid_argument("semidirect_cyclic: k must be positive");
  if (phi.size() != m) throw std::invalid_argument("semidirect_cyclic: automorphism size mismatch");
  // powers[j] = phi^j
  std::vector<std::vector<Element>> powers(k + 1);
  powers[0].resize(m);
  std::iota(powers[0].begin(), powers[0].end(), Element{0});
  for (std::size_t j = 1; j <= k; ++j) {
    powers[j].resize(m);
    for (Element x = 0; x < m; ++x) powers[j][x] = phi(powers[j - 1][x]);
  }
  if (powers[k] != powers[0]) throw std::invalid_argument("semidirect_cyclic: phi^k is not the identity");
  const std::size_t n = m * k;
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x = a % m, j = a / m, y = b % m, l = b / m;
      const Element z = normal.mul(static_cast<Element>(x), powers[j][y]);
      t[a * n + b] = static_cast<Element>(z + m * ((j + l) % k));
    }
  return make_group(n, std::move(t), std::move(label));
}

GroupTable permutation_group(const std::vector<std::vector<Element>>& generators, std::string label) {
  if (generators.empty()) throw std::invalid_argument("permutation_group: need at least one generator");
  const std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw std::invalid_argument("permutation_group: generators differ in degree");
    std::vector<Element> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != i) throw std::invalid_argument("permutation_group: generator is not a permutation");
  }
  auto compose = [&](const std::vector<Element>& p, const std::vector<Element>& q) {
    std::vector<Element> r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  std::vector<Element> id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::map<std::vector<Element>, Element> index;
  std::vector<std::vector<Element>> elems{id};
  index[id] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : generators) {
      auto x = compose(elems[head], g);
      if (index.emplace(x, 0).second) {
        elems.push_back(std::move(x));
        if (elems.size() > 100000) throw std::invalid_argument("permutation_group: group too large");
      }
    }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  return make_group(n, std::move(t), std::move(label));
}

GroupTable quotient(const GroupTable& g, const ElementSet& normal, std::string label) {
  const std::size_t n = g.order();
  if (!normal.contains(g.identity())) throw std::invalid_argument("quotient: N must contain the identity");
  const auto members = normal.members();
  for (Element a : members)
    for (Element b : members)
      if (!normal.contains(g.mul(a, b))) throw std::invalid_argument("quotient: N is not a subgroup");
  for (Element x = 0; x < n; ++x)
    for (Element a : members)
      if (!normal.contains(g.mul(g.mul(x, a), g.inverse(x)))) throw std::invalid_argument("quotient: N is not normal");
  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element a : members) coset_of[g.mul(x, a)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> t(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) t[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  return make_group(q, std::move(t), std::move(label));
}

bool is_automorphism(const GroupTable& g, const std::vector<Element>& image) {
  const std::size_t n = g.order();
  if (image.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Element x : image) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (image[g.mul(a, b)] != g.mul(image[a], image[b])) return false;
  return true;
}

Automorphism Automorphism::make(const GroupTable& g, std::vector<Element> image) {
  if (!is_automorphism(g, image)) throw std::invalid_argument("map is not an automorphism of " + g.label());
  return Automorphism(std::move(image));
}

Automorphism Automorphism::identity(const GroupTable& g) {
  std::vector<Element> id(g.order());
  std::iota(id.begin(), id.end(), Element{0});
  return Automorphism(std::move(id));
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<Element> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = next.image_[image_[i]];
  return Automorphism(std::move(out));
}

ElementSet Automorphism::apply(const ElementSet& s) const {
  ElementSet out(s.universe());
  s.for_each([&](Element x) { out.insert(image_[x]); });
  return out;
}

ConnectionSet ConnectionSet::make(const GroupTable& g, ElementSet bits) {
  if (bits.universe() != g.order()) throw std::invalid_argument("connection set universe does not match group order");
  if (bits.contains(g.identity())) throw std::invalid_argument("connection set must not contain the identity");
  bits.for_each([&](Element x) {
    if (!bits.contains(g.inverse(x)))
      throw std::invalid_argument("connection set is not closed under inversion (element " + std::to_string(x) + ")");
  });
  return ConnectionSet(std::move(bits));
}

ConnectionSet ConnectionSet::make(const GroupTable& g, const std::vector<Element>& members) {
  for (Element e : members)
    if (e >= g.order()) throw std::invalid_argument("element " + std::to_string(e) + " out of range");
  return make(g, ElementSet::of(g.order(), members));
}

bool generates(const GroupTable& g, const ElementSet& omega) {
  return g.closure(omega.members()).size() == g.order();
}

bool generates(const GroupTable& g, const ConnectionSet& omega) { return generates(g, omega.bits()); }

std::vector<Automorphism> inner_automorphisms(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Automorphism> out;
  std::map<std::vector<Element>, bool> seen;
  std::vector<Element> order_of_conj;
  // Identity conjugator first so the identity map leads the list.
  order_of_conj.push_back(g.identity());
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) order_of_conj.push_back(x);
  for (Element c : order_of_conj) {
    std::vector<Element> img(n);
    const Element ci = g.inverse(c);
    for (Element x = 0; x < n; ++x) img[x] = g.mul(g.mul(c, x), ci);
    if (seen.emplace(img, true).second) out.push_back(Automorphism::make(g, std::move(img)));
  }
  return out;
}

std::vector<Block> symmetric_blocks(const GroupTable& g, const ElementSet& s, const Automorphism& alpha) {
  if (s.contains(g.identity())) throw std::invalid_argument("symmetric_blocks: S must exclude the identity");
  if (alpha.apply(s) != s) throw std::invalid_argument("symmetric_blocks: automorphism does not stabilize S");
  std::vector<Block> blocks;
  ElementSet seen(g.order());
  s.for_each([&](Element start) {
    if (seen.contains(start)) return;
    Block block{start};
    seen.insert(start);
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (Element y : {alpha(block[head]), g.inverse(block[head])}) {
        if (!seen.contains(y)) {
          if (!s.contains(y)) throw std::invalid_argument("symmetric_blocks: S is not closed under inversion");
          seen.insert(y);
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  });
  return blocks;
}

}  // namespace cayley
