#include "orderlab/word.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orderlab {

namespace {

void appendReduced(std::vector<GroupWord::Letter>& out,
                   const GroupWord::Letter& letter) {
  if (letter.exp == 0) return;
  if (!out.empty() && out.back().gen == letter.gen) {
    out.back().exp += letter.exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const auto& l : letters) appendReduced(letters_, l);
}

GroupWord GroupWord::generator(int gen, long exp) {
  return GroupWord({{gen, exp}});
}

long GroupWord::length() const {
  long total = 0;
  for (const auto& l : letters_) total += l.exp < 0 ? -l.exp : l.exp;
  return total;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  GroupWord w;
  w.letters_ = std::move(out);  // reversal of a reduced word stays reduced
  return w;
}

GroupWord GroupWord::pow(long exponent) const {
  if (exponent == 0) return GroupWord();
  GroupWord base = exponent < 0 ? inverse() : *this;
  long count = exponent < 0 ? -exponent : exponent;
  GroupWord acc = base;
  for (long k = 1; k < count; ++k) acc = acc * base;
  return acc;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<GroupWord::Letter> out = a.letters_;
  for (const auto& l : b.letters_) appendReduced(out, l);
  GroupWord w;
  w.letters_ = std::move(out);
  return w;
}

std::string GroupWord::str(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) out << ' ';
    first = false;
    if (l.gen >= 0 && l.gen < static_cast<int>(names.size()))
      out << names[l.gen];
    else
      out << 'g' << l.gen;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

GroupWord GroupWord::parse(const std::string& text,
                           const std::vector<std::string>& names) {
  std::map<std::string, int> ids;
  for (size_t i = 0; i < names.size(); ++i) ids[names[i]] = static_cast<int>(i);
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    std::string name = token;
    long exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      exp = std::stol(token.substr(caret + 1));
    }
    auto it = ids.find(name);
    if (it == ids.end())
      throw std::invalid_argument("word: unknown generator '" + name + "'");
    letters.push_back({it->second, exp});
  }
  return GroupWord(std::move(letters));
}

GroupModel::GroupModel(std::vector<std::string> names,
                       std::vector<SpecialLinearElement> generators)
    : names_(std::move(names)), generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("group model: no generators");
  if (names_.size() != generators_.size())
    throw std::invalid_argument("group model: name/generator count mismatch");
  for (const auto& g : generators_)
    if (g.dim() != generators_[0].dim())
      throw DimensionMismatch("group model: mixed dimensions");
}

SpecialLinearElement GroupModel::evaluate(const GroupWord& word) const {
  SpecialLinearElement acc = SpecialLinearElement::identity(dim());
  for (const auto& l : word.letters())
    acc = acc * generators_.at(l.gen).pow(l.exp);
  return acc;
}

bool GroupModel::isIdentity(const GroupWord& word) const {
  return evaluate(word).matrix().isIdentity();
}

std::vector<GroupWord> GroupModel::ball(int radius) const {
  std::vector<GroupWord> out;
  std::map<std::string, bool> seen;
  std::vector<GroupWord> frontier{GroupWord()};
  seen[evaluate(GroupWord()).matrix().key()] = true;
  out.push_back(GroupWord());
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < generatorCount(); ++g) {
        for (long e : {1L, -1L}) {
          GroupWord candidate = w * GroupWord::generator(g, e);
          auto key = evaluate(candidate).matrix().key();
          if (seen.contains(key)) continue;
          seen[key] = true;
          out.push_back(candidate);
          next.push_back(candidate);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace orderlab
