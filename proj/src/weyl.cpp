#include "clift/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace clift {

std::string Word::str() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << "s" << letters[i];
  }
  return os.str();
}

void validate_word(const CartanMatrix& c, const Word& w) {
  for (int l : w.letters)
    if (l < 1 || l > c.rank())
      throw InputError("word letter " + std::to_string(l) + " out of range for " +
                       c.type().str());
}

int PrevPos::pos() const {
  if (!v_) throw Error("no previous occurrence");
  return *v_;
}

int NextPos::pos() const {
  if (!v_) throw Error("no next occurrence");
  return *v_;
}

Occurrences::Occurrences(const Word& w) {
  const int m = w.length();
  prev_.assign(m, PrevPos::none());
  next_.assign(m, NextPos::none());
  for (int k = 1; k <= m; ++k) {
    for (int j = k - 1; j >= 1; --j)
      if (w.at(j) == w.at(k)) {
        prev_[k - 1] = PrevPos::at(j);
        break;
      }
    for (int j = k + 1; j <= m; ++j)
      if (w.at(j) == w.at(k)) {
        next_[k - 1] = NextPos::at(j);
        break;
      }
  }
}

namespace {

// s_j acting on a root in simple-root coordinates: the j-th coefficient
// drops by row j of the Cartan matrix dotted with the vector.
void reflect_root(const CartanMatrix& c, int j, std::vector<long long>& v) {
  long long dot = 0;
  for (int i = 1; i <= c.rank(); ++i) dot += c.a(j, i) * v[i - 1];
  v[j - 1] -= dot;
}

}  // namespace

bool is_reduced(const CartanMatrix& c, const Word& w) {
  validate_word(c, w);
  const int m = w.length();
  // Reduced iff every root s_{i_m}...s_{i_{k+1}}(alpha_{i_k}) is positive.
  for (int k = 1; k <= m; ++k) {
    std::vector<long long> v(c.rank(), 0);
    v[w.at(k) - 1] = 1;
    for (int t = k + 1; t <= m; ++t) reflect_root(c, w.at(t), v);
    bool nonneg = std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
    if (!nonneg) return false;
  }
  return true;
}

Weight act(const CartanMatrix& c, const Word& w, Weight lambda) {
  validate_word(c, w);
  for (int k = w.length(); k >= 1; --k) lambda = reflect(c, w.at(k), std::move(lambda));
  return lambda;
}

std::set<int> support(const Word& w) {
  return std::set<int>(w.letters.begin(), w.letters.end());
}

Word longest_word(const CartanMatrix& c) {
  const int n = c.rank();
  Weight v(n, 1);
  std::vector<int> applied;
  for (;;) {
    int i = 0;
    for (int j = 1; j <= n; ++j)
      if (v[j - 1] > 0) {
        i = j;
        break;
      }
    if (i == 0) break;  // antidominant: done
    v = reflect(c, i, std::move(v));
    applied.push_back(i);
  }
  std::reverse(applied.begin(), applied.end());
  return Word{std::move(applied)};
}

}  // namespace clift
