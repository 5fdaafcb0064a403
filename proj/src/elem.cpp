#include "moschext/elem.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <cctype>
#include <unordered_map>

#include "moschext/errors.hpp"

namespace moschext {

namespace {

std::size_t hash_base_id(const BaseId& id) {
  std::size_t h = id.index() == 0 ? 0x9e3779b97f4a7c15ull : 0xc2b2ae3d27d4eb4full;
  if (id.index() == 0) {
    boost::hash_combine(h, std::get<0>(id));
  } else {
    boost::hash_combine(h, boost::hash<Rat>{}(std::get<1>(id)));
  }
  return h;
}

struct BaseKeyHash {
  std::size_t operator()(const BaseId& id) const { return hash_base_id(id); }
};

struct PairKey {
  const ElemNode* l;
  const ElemNode* r;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = std::hash<const void*>{}(k.l);
    boost::hash_combine(h, std::hash<const void*>{}(k.r));
    return h;
  }
};

// Process-global interner.  Nodes live for the process lifetime, which keeps
// pointer equality valid everywhere and the hot pairing path allocation-light.
struct Interner {
  Elem the_atom;
  std::unordered_map<BaseId, Elem, BaseKeyHash> bases;
  std::unordered_map<PairKey, Elem, PairKeyHash> pairs;

  Interner() {
    auto node = std::make_shared<ElemNode>();
    node->kind = ElemKind::Atom;
    node->hash = 0x517cc1b727220a95ull;
    node->depth = 0;
    the_atom = node;
    pairs.reserve(1 << 16);
  }
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Elem atom() { return interner().the_atom; }

Elem base_elem(const BaseId& id) {
  auto& tab = interner().bases;
  auto it = tab.find(id);
  if (it != tab.end()) return it->second;
  auto node = std::make_shared<ElemNode>();
  node->kind = ElemKind::Base;
  node->base = id;
  node->hash = hash_base_id(id);
  node->depth = 0;
  tab.emplace(id, node);
  return node;
}

Elem base_elem(std::uint32_t index) { return base_elem(BaseId(index)); }
Elem base_elem(const Rat& value) { return base_elem(BaseId(value)); }

Elem pair_elem(const Elem& l, const Elem& r) {
  auto& tab = interner().pairs;
  PairKey key{l.get(), r.get()};
  auto it = tab.find(key);
  if (it != tab.end()) return it->second;
  auto node = std::make_shared<ElemNode>();
  node->kind = ElemKind::Pair;
  node->left = l;
  node->right = r;
  std::size_t h = 0x2545f4914f6cdd1dull;
  boost::hash_combine(h, l->hash);
  boost::hash_combine(h, r->hash);
  node->hash = h;
  node->depth = 1 + std::max(l->depth, r->depth);
  tab.emplace(key, node);
  return node;
}

Elem left1(const Elem& z) {
  switch (z->kind) {
    case ElemKind::Atom: return z;
    case ElemKind::Base: return pair_elem(atom(), atom());
    case ElemKind::Pair: return z->left;
  }
  return z;  // unreachable
}

Elem right1(const Elem& z) {
  switch (z->kind) {
    case ElemKind::Atom: return z;
    case ElemKind::Base: return pair_elem(atom(), atom());
    case ElemKind::Pair: return z->right;
  }
  return z;  // unreachable
}

Elem nat_to_code(std::uint64_t n) {
  Elem z = atom();
  for (std::uint64_t i = 0; i < n; ++i) z = pair_elem(atom(), z);
  return z;
}

std::optional<std::uint64_t> as_nat_code(const Elem& z) {
  std::uint64_t n = 0;
  const ElemNode* cur = z.get();
  while (cur->kind == ElemKind::Pair) {
    if (cur->left->kind != ElemKind::Atom) return std::nullopt;
    ++n;
    cur = cur->right.get();
  }
  if (cur->kind != ElemKind::Atom) return std::nullopt;
  return n;
}

std::uint64_t code_to_nat(const Elem& z) {
  auto n = as_nat_code(z);
  if (!n) throw NotANatCodeError(print_elem(z));
  return *n;
}

Elem encode_seq(const std::vector<Elem>& zs) {
  Elem code = atom();
  for (auto it = zs.rbegin(); it != zs.rend(); ++it) code = pair_elem(*it, code);
  return code;
}

int elem_cmp(const Elem& a, const Elem& b) {
  if (a.get() == b.get()) return 0;
  auto rank = [](ElemKind k) {
    return k == ElemKind::Atom ? 0 : k == ElemKind::Base ? 1 : 2;
  };
  if (rank(a->kind) != rank(b->kind)) return rank(a->kind) < rank(b->kind) ? -1 : 1;
  if (a->kind == ElemKind::Base) {
    if (a->base.index() != b->base.index())
      return a->base.index() < b->base.index() ? -1 : 1;
    if (a->base.index() == 0) {
      auto x = std::get<0>(a->base), y = std::get<0>(b->base);
      return x < y ? -1 : x > y ? 1 : 0;
    }
    const Rat& x = std::get<1>(a->base);
    const Rat& y = std::get<1>(b->base);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  // pairs
  if (int c = elem_cmp(a->left, b->left); c != 0) return c;
  return elem_cmp(a->right, b->right);
}

std::string print_elem(const Elem& z) {
  switch (z->kind) {
    case ElemKind::Atom: return "o";
    case ElemKind::Base: {
      if (z->base.index() == 0)
        return "`x" + std::to_string(std::get<0>(z->base)) + "`";
      return "`" + print_rational(std::get<1>(z->base)) + "`";
    }
    case ElemKind::Pair: {
      if (auto n = as_nat_code(z)) return "#" + std::to_string(*n);
      return "(" + print_elem(z->left) + "," + print_elem(z->right) + ")";
    }
  }
  return "";  // unreachable
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found =
        eof() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(line, col, expected, found);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || peek() != c) fail(what);
    advance();
  }
};

std::uint64_t parse_digits(Cursor& cur) {
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("digit");
  std::uint64_t v = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + static_cast<std::uint64_t>(cur.peek() - '0');
    cur.advance();
  }
  return v;
}

Elem parse_elem_inner(Cursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("element");
  char c = cur.peek();
  if (c == 'o') {
    cur.advance();
    return atom();
  }
  if (c == '#') {
    cur.advance();
    return nat_to_code(parse_digits(cur));
  }
  if (c == '(') {
    cur.advance();
    Elem l = parse_elem_inner(cur);
    cur.expect(',', "','");
    Elem r = parse_elem_inner(cur);
    cur.expect(')', "')'");
    return pair_elem(l, r);
  }
  if (c == '`') {
    cur.advance();
    std::size_t start = cur.i;
    int start_col = cur.col;
    while (!cur.eof() && cur.peek() != '`') cur.advance();
    if (cur.eof()) cur.fail("closing '`'");
    std::string body = cur.s.substr(start, cur.i - start);
    cur.advance();  // closing backtick
    if (body.empty()) throw SyntaxError(cur.line, start_col, "base point", "'`'");
    if (body[0] == 'x') {
      Cursor b(body);
      b.advance();
      std::uint64_t idx = parse_digits(b);
      if (!b.eof() || idx > 0xFFFFFFFFull)
        throw SyntaxError(cur.line, start_col, "abstract base index", "'" + body + "'");
      return base_elem(static_cast<std::uint32_t>(idx));
    }
    try {
      return base_elem(parse_rational(body));
    } catch (const SyntaxError& e) {
      throw SyntaxError(cur.line, start_col + e.col() - 1, e.expected(), e.found());
    }
  }
  cur.fail("'o', '#', '(', or '`'");
}

}  // namespace

Elem parse_elem(const std::string& text) {
  Cursor cur(text);
  Elem z = parse_elem_inner(cur);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("end of input");
  return z;
}

ElemSet set_of(std::initializer_list<Elem> zs) {
  ElemSet s;
  for (const auto& z : zs) set_insert(s, z);
  return s;
}

void set_insert(ElemSet& s, const Elem& z) {
  auto it = std::lower_bound(s.begin(), s.end(), z, [](const Elem& a, const Elem& b) {
    return elem_cmp(a, b) < 0;
  });
  if (it != s.end() && it->get() == z.get()) return;
  s.insert(it, z);
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = elem_cmp(a[i], b[j]);
    if (c < 0) out.push_back(a[i++]);
    else if (c > 0) out.push_back(b[j++]);
    else { out.push_back(a[i++]); ++j; }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

bool set_contains(const ElemSet& s, const Elem& z) {
  auto it = std::lower_bound(s.begin(), s.end(), z, [](const Elem& a, const Elem& b) {
    return elem_cmp(a, b) < 0;
  });
  return it != s.end() && it->get() == z.get();
}

bool set_subset(const ElemSet& a, const ElemSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j >= b.size()) return false;
    int c = elem_cmp(a[i], b[j]);
    if (c == 0) { ++i; ++j; }
    else if (c > 0) ++j;
    else return false;
  }
  return true;
}

bool set_eq(const ElemSet& a, const ElemSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].get() != b[i].get()) return false;
  return true;
}

std::string print_elem_set(const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += print_elem(s[i]);
  }
  out += "}";
  return out;
}

bool set_has_basic(const ElemSet& s) {
  for (const auto& z : s)
    if (is_basic(z)) return true;
  return false;
}

bool set_has_pair(const ElemSet& s) {
  for (const auto& z : s)
    if (is_pair(z)) return true;
  return false;
}

}  // namespace moschext
