#include "racg/words.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "racg/vinberg.hpp"

namespace racg {

namespace {

/// Cancels each incoming letter against an earlier equal letter that it can
/// be commuted next to. Every prefix of the output stays reduced.
Word reduce(const Word& w, const CoxeterDiagram& g) {
  Word out;
  for (int x : w) {
    bool cancelled = false;
    for (std::size_t p = out.size(); p-- > 0;) {
      if (out[p] == x) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(p));
        cancelled = true;
        break;
      }
      if (!g.commutes(out[p], x)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return out;
}

/// Repeatedly emits the smallest letter that can be commuted to the front.
Word lex_least(Word w, const CoxeterDiagram& g) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < w.size(); ++p) {
      if (w[p] >= w[best]) continue;
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q) movable = g.commutes(w[q], w[p]) && w[q] != w[p];
      if (movable) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::string key_of(const RatMatrix& m) {
  std::string s;
  for (const auto& x : m.data()) {
    s += x.str();
    s += ',';
  }
  return s;
}

/// W·R_i: only column i and the columns of neighbours of i change.
void right_multiply(RatMatrix& w, const RatMatrix& gram, int i) {
  const std::size_t n = w.rows();
  const auto c = static_cast<std::size_t>(i);
  std::vector<Rat> col(n);
  for (std::size_t r = 0; r < n; ++r) col[r] = w(r, c) * Rat(2);
  for (std::size_t j = 0; j < n; ++j) {
    const Rat& mij = gram(c, j);
    if (mij.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) w(r, j) -= col[r] * mij;
  }
}

}  // namespace

Word normal_form(const Word& w, const CoxeterDiagram& g) {
  for (int x : w)
    if (x < 0 || x >= g.size())
      throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(x + 1) + " out of range");
  return lex_least(reduce(w, g), g);
}

std::vector<std::vector<Word>> normal_forms_by_length(const CoxeterDiagram& g, int L) {
  if (L < 0) throw Error(ErrorKind::InvalidArgument, "length bound must be non-negative");
  std::vector<std::vector<Word>> levels{{Word{}}};
  for (int len = 1; len <= L; ++len) {
    std::set<Word> next;
    for (const Word& u : levels.back())
      for (int x = 0; x < g.size(); ++x) {
        Word v = u;
        v.push_back(x);
        v = normal_form(v, g);
        if (static_cast<int>(v.size()) == len) next.insert(std::move(v));
      }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

std::vector<std::size_t> enumerate_by_length(const CoxeterDiagram& g, int L) {
  std::vector<std::size_t> counts;
  for (const auto& level : normal_forms_by_length(g, L)) counts.push_back(level.size());
  return counts;
}

FaithfulnessReport faithfulness_probe(const CoxeterDiagram& g, const Rat& t, int L) {
  if (t < Rat(1)) throw Error(ErrorKind::InvalidArgument, "faithfulness probe needs t >= 1");
  if (L < 0 || L > 10) throw Error(ErrorKind::InvalidArgument, "faithfulness probe needs 0 <= L <= 10");
  FaithfulnessReport r;
  r.t = t;
  r.L = L;
  const auto levels = normal_forms_by_length(g, L);

  // A prefix of a normal form is a normal form, so the union of the levels
  // in lexicographic order is a depth-first walk of the prefix tree; a stack
  // of prefix matrices then gives each matrix with one update.
  std::vector<const Word*> all;
  for (const auto& level : levels) {
    r.normal_form_counts.push_back(level.size());
    for (const auto& w : level) all.push_back(&w);
  }
  std::sort(all.begin(), all.end(), [](const Word* a, const Word* b) { return *a < *b; });

  const auto gram = evaluate_pencil(gram_pencil(g), t);
  std::vector<RatMatrix> stack{RatMatrix::identity(static_cast<std::size_t>(g.size()), Rat(1))};
  std::unordered_set<std::string> seen;
  std::vector<std::unordered_set<std::string>> per_length(levels.size());
  bool prefix_closed = true;
  for (const Word* w : all) {
    if (!w->empty()) {
      const Word parent(w->begin(), w->end() - 1);
      const auto& up = levels[parent.size()];
      if (!std::binary_search(up.begin(), up.end(), parent)) prefix_closed = false;
      stack.resize(w->size());
      RatMatrix m = stack.back();
      right_multiply(m, gram, w->back());
      stack.push_back(std::move(m));
    }
    std::string key = key_of(stack.back());
    per_length[w->size()].insert(key);
    seen.insert(std::move(key));
  }
  for (const auto& s : per_length) r.image_counts.push_back(s.size());
  r.distinct_images = seen.size();
  r.ok = prefix_closed && r.image_counts == r.normal_form_counts && r.distinct_images == all.size();
  return r;
}

std::vector<Word> even_filter(const std::vector<Word>& words) {
  std::vector<Word> out;
  for (const auto& w : words)
    if (w.size() % 2 == 0) out.push_back(w);
  return out;
}

}  // namespace racg
