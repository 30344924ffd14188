#include "s4bell/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace s4bell {

namespace {

void check_bijection(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation image out of range");
    if (seen[v - 1]) throw std::invalid_argument("repeated permutation image");
    seen[v - 1] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation parse_one_line(std::string_view text) {
  std::string_view s = text;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.size() != 4) throw std::invalid_argument("expected four digits in one-line notation");
  std::vector<int> im;
  im.reserve(4);
  for (char c : s) {
    if (c < '1' || c > '4') throw std::invalid_argument("one-line digit outside 1..4");
    im.push_back(c - '0');
  }
  return Permutation(std::move(im));
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (int v : p.images()) out += static_cast<char>('0' + v);
  out += ')';
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> im(p.degree());
  for (int x = 1; x <= p.degree(); ++x) im[x - 1] = q(p(x));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.degree());
  for (int x = 1; x <= p.degree(); ++x) im[p(x) - 1] = x;
  return Permutation(std::move(im));
}

int order(const Permutation& p) {
  int n = 1;
  Permutation q = p;
  while (!q.is_identity()) {
    q = compose(q, p);
    ++n;
  }
  return n;
}

Permutation transposition(int degree, int i, int j) {
  if (i < 1 || j < 1 || i > degree || j > degree || i == j)
    throw std::invalid_argument("bad transposition points");
  Permutation p = Permutation::identity(degree);
  std::vector<int> im = p.images();
  std::swap(im[i - 1], im[j - 1]);
  return Permutation(std::move(im));
}

std::string to_string(CosetCoord c) {
  return "(" + std::to_string(c.alpha) + "," + std::to_string(c.l) + ")";
}

std::string_view to_string(ConjugacyClass c) {
  switch (c) {
    case ConjugacyClass::I: return "I";
    case ConjugacyClass::II: return "II";
    case ConjugacyClass::III: return "III";
    case ConjugacyClass::IV: return "IV";
    case ConjugacyClass::V: return "V";
  }
  return "?";
}

int GroupTable::index_of(const Permutation& p) const {
  if (p.degree() != 4) throw std::invalid_argument("GroupTable handles degree 4 only");
  // Lexicographic rank via the Lehmer code.
  static constexpr int kFact[4] = {6, 2, 1, 1};
  const auto& im = p.images();
  int rank = 0;
  for (int i = 0; i < 4; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 4; ++j) smaller += im[j] < im[i];
    rank += smaller * kFact[i];
  }
  return rank;
}

CosetCoord GroupTable::coset_factorize(const Permutation& p) const {
  return coords_by_index_[index_of(p)];
}

const Permutation& GroupTable::element(CosetCoord c) const {
  if (c.alpha < 1 || c.alpha > kCosets || c.l < 0 || c.l >= kSubgroupOrder)
    throw std::invalid_argument("coset coordinate out of range");
  return elements_[element_by_coord_[flat_index(c)]];
}

ConjugacyClass GroupTable::conjugacy_class(const Permutation& p) const {
  return class_by_index_[index_of(p)];
}

GroupTable GroupTable::build() {
  GroupTable t;
  std::vector<int> im = {1, 2, 3, 4};
  do {
    t.elements_.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));

  t.generator_ = parse_one_line("(2314)");
  const char* reps[kCosets] = {"(1234)", "(2134)", "(4231)", "(1432)",
                               "(1342)", "(1423)", "(2341)", "(4132)"};
  for (int a = 0; a < kCosets; ++a) t.coset_reps_[a] = parse_one_line(reps[a]);

  // (alpha, l) -> g_alpha * g^l must hit every element exactly once.
  std::array<bool, kOrder> hit{};
  for (int a = 1; a <= kCosets; ++a) {
    Permutation p = t.coset_reps_[a - 1];
    for (int l = 0; l < kSubgroupOrder; ++l) {
      const int idx = t.index_of(p);
      if (hit[idx]) throw std::logic_error("coset factorization is not a bijection");
      hit[idx] = true;
      t.coords_by_index_[idx] = CosetCoord{a, l};
      t.element_by_coord_[flat_index(CosetCoord{a, l})] = idx;
      p = compose(p, t.generator_);
    }
  }

  // H = {e, g, g^2} closed under product and inverse.
  const Permutation g2 = compose(t.generator_, t.generator_);
  const std::set<Permutation> h = {Permutation::identity(4), t.generator_, g2};
  for (const auto& x : h)
    for (const auto& y : h)
      if (!h.count(compose(x, y)) || !h.count(inverse(x)))
        throw std::logic_error("H is not a subgroup");

  // Conjugacy classes by conjugation closure, labelled by size and element
  // order (the two size-6 classes are transpositions vs 4-cycles).
  std::array<int, kOrder> class_id;
  class_id.fill(-1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < kOrder; ++i) {
    if (class_id[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> members;
    for (const auto& q : t.elements_) {
      const Permutation c = compose(compose(inverse(q), t.elements_[i]), q);
      const int idx = t.index_of(c);
      if (class_id[idx] < 0) {
        class_id[idx] = id;
        members.push_back(idx);
      }
    }
    classes.push_back(std::move(members));
  }

  t.class_sizes_.fill(0);
  for (const auto& members : classes) {
    const int size = static_cast<int>(members.size());
    const int ord = order(t.elements_[members.front()]);
    ConjugacyClass label;
    if (size == 8) label = ConjugacyClass::I;
    else if (size == 6 && ord == 2) label = ConjugacyClass::II;
    else if (size == 6 && ord == 4) label = ConjugacyClass::III;
    else if (size == 3) label = ConjugacyClass::IV;
    else if (size == 1) label = ConjugacyClass::V;
    else throw std::logic_error("unexpected conjugacy class structure");
    for (int idx : members) t.class_by_index_[idx] = label;
    t.class_sizes_[static_cast<int>(label)] = size;
  }
  if (t.class_sizes_ != std::array<int, 5>{8, 6, 6, 3, 1})
    throw std::logic_error("conjugacy class sizes are wrong");

  return t;
}

}  // namespace s4bell
