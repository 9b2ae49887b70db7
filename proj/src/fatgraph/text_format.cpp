#include "moduli/fatgraph/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace moduli {

namespace {

void write_cycles(std::ostringstream& out, const std::vector<int>& perm) {
  for (const auto& c : cycles_of(perm)) {
    out << "(";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << ")";
  }
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view word) {
    skip_space();
    if (s_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  int number() {
    skip_space();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || v <= 0) fail("expected a positive integer");
    pos_ = ptr - s_.data();
    return v;
  }
  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw RefusalError("fatgraph text, column " + std::to_string(pos_ + 1) + ": " + why);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<int>> read_cycles(Cursor& cur) {
  std::vector<std::vector<int>> out;
  while (cur.eat('(')) {
    std::vector<int> c;
    while (!cur.eat(')')) c.push_back(cur.number() - 1);
    if (c.empty()) cur.fail("empty cycle");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> to_permutation(const std::vector<std::vector<int>>& cycles, Cursor& cur) {
  int size = 0;
  for (const auto& c : cycles)
    for (int x : c) size = std::max(size, x + 1);
  std::vector<int> perm(size, -1);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (perm[c[i]] != -1) cur.fail("dart " + std::to_string(c[i] + 1) + " appears twice");
      perm[c[i]] = c[(i + 1) % c.size()];
    }
  for (int x : perm)
    if (x == -1) cur.fail("darts must be numbered 1..2E without gaps");
  return perm;
}

}  // namespace

std::string write_fatgraph(const FatGraph& g) {
  std::ostringstream out;
  out << "tau0=";
  write_cycles(out, g.tau0);
  out << "; tau1=";
  write_cycles(out, g.tau1);
  out << "; labels=[";
  for (std::size_t i = 0; i < g.boundary_labels.size(); ++i) out << (i ? "," : "") << g.boundary_labels[i];
  out << "]";
  return out.str();
}

FatGraph read_fatgraph(std::string_view line) {
  Cursor cur(line);
  FatGraph g;
  cur.expect("tau0=");
  g.tau0 = to_permutation(read_cycles(cur), cur);
  if (!cur.eat(';')) cur.fail("expected ';'");
  cur.expect("tau1=");
  g.tau1 = to_permutation(read_cycles(cur), cur);
  if (g.tau1.size() != g.tau0.size()) cur.fail("tau0 and tau1 act on different dart sets");
  if (!cur.eat(';')) cur.fail("expected ';'");
  cur.expect("labels=");
  if (!cur.eat('[')) cur.fail("expected '['");
  if (!cur.eat(']')) {
    do g.boundary_labels.push_back(cur.number());
    while (cur.eat(','));
    if (!cur.eat(']')) cur.fail("expected ']'");
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return g;
}

}  // namespace moduli
