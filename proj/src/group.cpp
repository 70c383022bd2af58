#include "superdet/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "superdet/error.hpp"

namespace superdet {

namespace {

std::string element_name(std::size_t i) { return i == 0 ? "1" : "g" + std::to_string(i); }

// Appends generator letter to a word label, folding repeated letters into
// exponents: "a" + a -> "a2", "ab2" + b -> "ab3".
std::string extend_word(const std::string& word, char letter) {
  if (word == "1") return std::string(1, letter);
  std::size_t pos = word.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(word[pos - 1]))) --pos;
  if (pos > 0 && word[pos - 1] == letter) {
    int power = pos == word.size() ? 1 : std::stoi(word.substr(pos));
    return word.substr(0, pos) + std::to_string(power + 1);
  }
  return word + letter;
}

std::string perm_key(const std::vector<Element>& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(Element));
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has length " +
                                               std::to_string(table[i].size()) + ", expected " +
                                               std::to_string(n));
    for (Element v : table[i])
      if (v >= n)
        throw Error(ErrorCode::InvalidInput,
                    "row " + std::to_string(i) + " has out-of-range entry " + std::to_string(v));
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::InvalidInput, "label count does not match table size");

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i][j]])
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats entry " +
                                                   std::to_string(table[i][j]));
      seen[table[i][j]] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]])
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(j) + " repeats entry " +
                                                   std::to_string(table[i][j]));
      seen[table[i][j]] = 1;
    }
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[c][j] == j && table[j][c] == j;
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorCode::NoIdentity, "no two-sided identity element in table");

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]]) {
      std::ostringstream msg;
      msg << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
      throw Error(ErrorCode::NotAssociative, msg.str());
    }
  };
  if (n <= kFullAssociativityCheckMax) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < 10 * n * n; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  // Swap e <-> 0 so the identity is element 0.
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Element{0});
  std::swap(relabel[0], relabel[e]);

  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.table_[relabel[i] * n + relabel[j]] = relabel[table[i][j]];
  g.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[i * n + j] == 0) g.inverse_[i] = static_cast<Element>(j);

  g.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.labels_[relabel[i]] = labels.empty() ? element_name(relabel[i]) : labels[i];
  return g;
}

std::vector<Element> parse_cycles(const std::string& text, std::size_t degree) {
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::InvalidCycleNotation, "\"" + text + "\": " + why);
  };
  std::vector<Element> image(degree);
  std::iota(image.begin(), image.end(), Element{0});
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  bool any_cycle = false;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("unexpected character '" + std::string(1, text[pos]) + "'");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value >= degree) fail("point out of range for degree " + std::to_string(degree));
        ++pos;
      }
      if (used[value]) fail("point " + std::to_string(value) + " appears twice");
      used[value] = 1;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[cycle[i]] = static_cast<Element>(cycle[(i + 1) % cycle.size()]);
    any_cycle = true;
    skip_space();
  }
  if (!any_cycle) fail("no cycles");
  return image;
}

FiniteGroup FiniteGroup::from_permutations(std::span<const std::string> generators,
                                           std::size_t degree, std::size_t order_cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  std::vector<std::vector<Element>> gens;
  gens.reserve(generators.size());
  for (const auto& text : generators) gens.push_back(parse_cycles(text, degree));

  std::vector<Element> id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::vector<std::vector<Element>> elems{id};
  std::vector<std::string> labels{"1"};
  std::unordered_map<std::string, Element> index{{perm_key(id), 0}};

  auto compose = [degree](const std::vector<Element>& p, const std::vector<Element>& q) {
    std::vector<Element> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };

  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto next = compose(elems[cur], gens[k]);
      auto key = perm_key(next);
      if (index.count(key)) continue;
      if (elems.size() >= order_cap)
        throw Error(ErrorCode::GroupTooLarge,
                    "closure exceeds order cap " + std::to_string(order_cap));
      index.emplace(std::move(key), static_cast<Element>(elems.size()));
      labels.push_back(k < 26 ? extend_word(labels[cur], static_cast<char>('a' + k))
                              : element_name(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  const std::size_t n = elems.size();
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v = index.at(perm_key(compose(elems[i], elems[j])));
      g.table_[i * n + j] = v;
      if (v == 0) g.inverse_[i] = static_cast<Element>(j);
    }
  g.labels_ = std::move(labels);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = table_[i * n_ + j];
  return out;
}

ConjClasses conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<Element>> classes;
  for (Element g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      Element c = group.conjugate(g, h);
      if (!assigned[c]) {
        assigned[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  ConjClasses out;
  out.class_of.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out.sizes.push_back(classes[c].size());
    for (Element g : classes[c]) out.class_of[g] = c;
  }
  out.classes = std::move(classes);
  return out;
}

namespace groups {

namespace {

std::string cycle_string(std::span<const std::size_t> points) {
  std::string s = "(";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(points[i]);
  }
  return s + ")";
}

std::string range_cycle(std::size_t start, std::size_t length) {
  std::vector<std::size_t> pts(length);
  std::iota(pts.begin(), pts.end(), start);
  return cycle_string(pts);
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 1) return FiniteGroup::from_cayley_table({{0}}).set_name("C1");
  std::vector<std::string> gens{range_cycle(0, n)};
  return FiniteGroup::from_permutations(gens, n).set_name("C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  std::vector<std::string> gens{range_cycle(0, n)};
  std::string reflection;
  for (std::size_t i = 1; i < n - i; ++i)
    reflection += "(" + std::to_string(i) + " " + std::to_string(n - i) + ")";
  if (reflection.empty()) reflection = "(0 1)";
  gens.push_back(reflection);
  return FiniteGroup::from_permutations(gens, std::max<std::size_t>(n, 2))
      .set_name("D" + std::to_string(n));
}

FiniteGroup quaternion() {
  std::vector<std::string> gens{"(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"};
  return FiniteGroup::from_permutations(gens, 8).set_name("Q8");
}

FiniteGroup dicyclic(std::size_t m) {
  // Elements a^i b^e stored at index i + 2m*e.
  const std::size_t half = 2 * m, n = 4 * m;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t i = x % half, e = x / half;
    labels[x] = x == 0 ? "1" : (i ? "a" + (i > 1 ? std::to_string(i) : "") : "") + (e ? "b" : "");
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t j = y % half, f = y / half;
      std::size_t power, b;
      if (e == 0) {
        power = (i + j) % half;
        b = f;
      } else {
        power = (i + half - j) % half;
        b = 1 + f;
        if (b == 2) {
          power = (power + m) % half;
          b = 0;
        }
      }
      table[x][y] = static_cast<Element>(power + half * b);
    }
  }
  return FiniteGroup::from_cayley_table(table, labels).set_name("Dic" + std::to_string(m));
}

FiniteGroup symmetric(std::size_t degree) {
  if (degree < 2) return cyclic(1).set_name("S" + std::to_string(degree));
  std::vector<std::string> gens{"(0 1)"};
  if (degree > 2) gens.push_back(range_cycle(0, degree));
  return FiniteGroup::from_permutations(gens, degree).set_name("S" + std::to_string(degree));
}

FiniteGroup alternating4() {
  std::vector<std::string> gens{"(0 1 2)", "(1 2 3)"};
  return FiniteGroup::from_permutations(gens, 4).set_name("A4");
}

FiniteGroup abelian(std::span<const std::size_t> orders) {
  std::vector<std::string> gens;
  std::size_t start = 0;
  std::string name;
  for (std::size_t k : orders) {
    gens.push_back(range_cycle(start, k));
    start += k;
    name += (name.empty() ? "C" : "xC") + std::to_string(k);
  }
  return FiniteGroup::from_permutations(gens, start).set_name(name);
}

}  // namespace groups

}  // namespace superdet
