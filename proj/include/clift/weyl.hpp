#pragma once

#include <optional>
#include <set>
#include <vector>

#include "clift/cartan.hpp"

namespace clift {

// Word in the generators of a Weyl group: letters are 1-based simple
// reflection indices.  A word (i_1, ..., i_m) denotes the product
// s_{i_1} s_{i_2} ... s_{i_m}, so the rightmost letter acts first.
struct Word {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  // Letter at 1-based position k.
  int at(int k) const { return letters.at(k - 1); }
  std::string str() const;  // "s3 s2 s1", "e" when empty
};

void validate_word(const CartanMatrix& c, const Word& w);

// Position of the previous occurrence of a letter, or -infinity when there
// is none.  The sentinel compares below every finite position.
class PrevPos {
 public:
  static PrevPos at(int k) { return PrevPos(k); }
  static PrevPos none() { return PrevPos(); }
  bool finite() const { return v_.has_value(); }
  int pos() const;  // throws Error when not finite

  friend bool operator==(const PrevPos& a, const PrevPos& b) = default;
  friend bool operator==(const PrevPos& a, int k) { return a.v_ == k; }
  friend bool operator<(const PrevPos& a, int k) { return !a.v_ || *a.v_ < k; }
  friend bool operator<(int k, const PrevPos& a) { return a.v_ && k < *a.v_; }

 private:
  PrevPos() = default;
  explicit PrevPos(int k) : v_(k) {}
  std::optional<int> v_;
};

// Position of the next occurrence of a letter, or +infinity when there is
// none.  The sentinel compares above every finite position.
class NextPos {
 public:
  static NextPos at(int k) { return NextPos(k); }
  static NextPos none() { return NextPos(); }
  bool finite() const { return v_.has_value(); }
  int pos() const;  // throws Error when not finite

  friend bool operator==(const NextPos& a, const NextPos& b) = default;
  friend bool operator==(const NextPos& a, int k) { return a.v_ == k; }
  friend bool operator<(const NextPos& a, int k) { return a.v_ && *a.v_ < k; }
  friend bool operator<(int k, const NextPos& a) { return !a.v_ || k < *a.v_; }
  friend bool operator<(const NextPos& a, const NextPos& b) {
    if (!b.v_) return a.v_.has_value();
    return a.v_ && *a.v_ < *b.v_;
  }

 private:
  NextPos() = default;
  explicit NextPos(int k) : v_(k) {}
  std::optional<int> v_;
};

// For each position k of a word, the previous and next positions carrying
// the same letter.
class Occurrences {
 public:
  explicit Occurrences(const Word& w);
  PrevPos p(int k) const { return prev_.at(k - 1); }
  NextPos s(int k) const { return next_.at(k - 1); }

 private:
  std::vector<PrevPos> prev_;
  std::vector<NextPos> next_;
};

// True when no shorter word represents the same group element; decided by
// tracking the roots the word's reflections send negative.
bool is_reduced(const CartanMatrix& c, const Word& w);

// Image of a weight under the word's group element (rightmost letter
// first).
Weight act(const CartanMatrix& c, const Word& w, Weight lambda);

// Set of distinct letters.
std::set<int> support(const Word& w);

// A reduced word for the longest element, computed by greedy descent from
// the all-ones dominant weight.  Deterministic: the smallest admissible
// letter is taken at every step.
Word longest_word(const CartanMatrix& c);

}  // namespace clift
