#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderlab/matrix.hpp"

namespace orderlab {

/// Freely reduced word over abstract generators. Generator ids index into a
/// GroupModel; exponents are nonzero and adjacent letters have distinct ids.
class GroupWord {
 public:
  struct Letter {
    int gen = 0;
    long exp = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord generator(int gen, long exp = 1);

  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  long length() const;  // total |exponent| mass

  GroupWord inverse() const;
  GroupWord pow(long exponent) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.letters_ == b.letters_;
  }

  /// "e" for the empty word, otherwise e.g. "g0 g2^-3".
  std::string str(const std::vector<std::string>& names = {}) const;

  static GroupWord parse(const std::string& text,
                         const std::vector<std::string>& names);

 private:
  std::vector<Letter> letters_;
};

/// Generators with exact matrix realizations; the element-equality backend
/// for order oracles and certificates.
class GroupModel {
 public:
  GroupModel(std::vector<std::string> names,
             std::vector<SpecialLinearElement> generators);

  int generatorCount() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const SpecialLinearElement& generator(int id) const { return generators_.at(id); }
  int dim() const { return generators_.at(0).dim(); }

  SpecialLinearElement evaluate(const GroupWord& word) const;
  bool isIdentity(const GroupWord& word) const;

  /// All freely reduced words of length <= radius (letters with exponent +-1),
  /// deduplicated by evaluated element; includes the empty word. Closed under
  /// inversion.
  std::vector<GroupWord> ball(int radius) const;

 private:
  std::vector<std::string> names_;
  std::vector<SpecialLinearElement> generators_;
};

}  // namespace orderlab
