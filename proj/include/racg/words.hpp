#pragma once

#include <vector>

#include "racg/diagram.hpp"
#include "racg/rational.hpp"

namespace racg {

/// Generator indices, 0-based (the CLI prints them 1-based).
using Word = std::vector<int>;

/// Shortlex-least reduced representative of the element w. Letters i and j
/// commute exactly when diagram.commutes(i, j). Throws IndexOutOfRange.
Word normal_form(const Word& w, const CoxeterDiagram& g);

/// Normal forms of each length 0..L, each level sorted lexicographically.
std::vector<std::vector<Word>> normal_forms_by_length(const CoxeterDiagram& g, int L);

/// Number of group elements of each length 0..L.
std::vector<std::size_t> enumerate_by_length(const CoxeterDiagram& g, int L);

struct FaithfulnessReport {
  Rat t;
  int L = 0;
  std::vector<std::size_t> normal_form_counts;
  std::vector<std::size_t> image_counts;   // distinct matrices per length
  std::size_t distinct_images = 0;         // across all lengths
  bool ok = false;
};

/// Maps every normal form of length ≤ L to its matrix under σ_t and checks
/// that no two collide. Requires t ≥ 1 and 0 ≤ L ≤ 10 (InvalidArgument).
FaithfulnessReport faithfulness_probe(const CoxeterDiagram& g, const Rat& t, int L);

/// Even-length members of the list.
std::vector<Word> even_filter(const std::vector<Word>& words);

}  // namespace racg
