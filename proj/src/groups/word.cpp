#include "cactus/groups/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cactus/errors.hpp"

namespace cactus::groups {

using comb::Permutation;

Permutation Letter::permutation() const {
  if (kind != LetterKind::Perm) throw DomainError("letter is not a permutation");
  return Permutation(data);
}

Letter Letter::inverse() const {
  switch (kind) {
    case LetterKind::S:
    case LetterKind::Sigma:
      return *this;
    case LetterKind::Perm:
      return perm(permutation().inverse());
    case LetterKind::Rot:
      return rot(-data[0]);
    case LetterKind::PureS: {
      auto a = data;
      std::reverse(a.begin(), a.end());
      return pure_s(std::move(a));
    }
    case LetterKind::PureSigma:
      return pure_sigma(data[1], data[0]);
    case LetterKind::Edge:
      return edge(data[0], -data[1]);
  }
  return *this;
}

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string Letter::to_string() const {
  switch (kind) {
    case LetterKind::S:
      return "s[" + join(data, ",") + "]";
    case LetterKind::Sigma:
      return "sigma[" + join(data, ",") + "]";
    case LetterKind::Perm:
      return "w(" + join(data, " ") + ")";
    case LetterKind::Rot:
      return data[0] == 1 ? std::string("r") : "r^" + std::to_string(data[0]);
    case LetterKind::PureS:
      return "s[A:" + join(data, ",") + "]";
    case LetterKind::PureSigma:
      return "sigma[" + join(data, ",") + "]";
    case LetterKind::Edge:
      return "e[" + std::to_string(data[0]) + "]" + (data[1] < 0 ? "^-1" : "");
  }
  return "?";
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].to_string();
  }
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view body, char sep, std::string_view token) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw DomainError("bad integer in word token '" + std::string(token) + "'");
    }
    cur.clear();
  };
  for (char c : body) {
    if (c == sep || (sep == ' ' && std::isspace(static_cast<unsigned char>(c)))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      cur += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw DomainError("unexpected character in word token '" + std::string(token) + "'");
    }
  }
  flush();
  return out;
}

Letter parse_token(std::string_view tok) {
  auto bracket_body = [&](std::size_t open) {
    auto close = tok.find(']', open);
    if (close == std::string_view::npos || close + 1 != tok.size()) {
      throw DomainError("unterminated bracket in '" + std::string(tok) + "'");
    }
    return tok.substr(open + 1, close - open - 1);
  };
  if (tok.rfind("s[A:", 0) == 0) {
    auto a = parse_ints(bracket_body(3), ',', tok);
    if (a.size() < 2) throw DomainError("s_A needs |A| >= 2");
    return Letter::pure_s(a);
  }
  if (tok.rfind("sigma[", 0) == 0) {
    auto v = parse_ints(bracket_body(5), ',', tok);
    if (v.size() == 1) return Letter::sigma(v[0]);
    if (v.size() == 2) return Letter::pure_sigma(v[0], v[1]);
    throw DomainError("sigma takes one or two indices");
  }
  if (tok.rfind("s[", 0) == 0) {
    auto v = parse_ints(bracket_body(1), ',', tok);
    if (v.size() != 2) throw DomainError("s[i,j] takes two indices");
    return Letter::s(v[0], v[1]);
  }
  if (tok.rfind("e[", 0) == 0) {
    auto v = parse_ints(bracket_body(1), ',', tok);
    if (v.size() != 1) throw DomainError("e[id] takes one index");
    return Letter::edge(v[0], 1);
  }
  if (tok.rfind("w(", 0) == 0) {
    if (tok.back() != ')') throw DomainError("unterminated permutation '" + std::string(tok) + "'");
    return Letter::perm(Permutation(parse_ints(tok.substr(2, tok.size() - 3), ' ', tok)));
  }
  if (tok == "r") return Letter::rot(1);
  if (tok.rfind("r^", 0) == 0) {
    auto v = parse_ints(tok.substr(2), ',', tok);
    if (v.size() != 1) throw DomainError("bad rotation exponent");
    return Letter::rot(v[0]);
  }
  throw DomainError("unknown word token '" + std::string(tok) + "'");
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text.substr(i, 2) == "w(") {
      j = text.find(')', i);
      if (j == std::string_view::npos) throw DomainError("unterminated permutation");
      ++j;
    } else {
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        if (text[j] == '^' && text.substr(j, 3) == "^-1" && text.substr(i, 2) != "r^") break;
        ++j;
      }
    }
    std::string_view tok = text.substr(i, j - i);
    if (tok == "1") {
      i = j;
      continue;
    }
    Letter x = parse_token(tok);
    if (text.substr(j, 3) == "^-1") {
      x = x.inverse();
      j += 3;
    }
    out.push_back(std::move(x));
    i = j;
  }
  return out;
}

namespace {

int norm_rot(int p, int n) {
  if (n <= 0) return p;
  int r = p % n;
  return r < 0 ? r + n : r;
}

bool is_trivial_factor(const Letter& x, int n) {
  if (x.kind == LetterKind::Perm) return x.permutation().is_identity();
  if (x.kind == LetterKind::Rot) return norm_rot(x.data[0], n) == 0;
  return false;
}

// Product a*b of two factor letters of the same kind.
Letter merge(const Letter& a, const Letter& b, int n) {
  if (a.kind == LetterKind::Perm) return Letter::perm(a.permutation() * b.permutation());
  return Letter::rot(norm_rot(a.data[0] + b.data[0], n));
}

}  // namespace

Word reduce(const Word& w, int n) {
  Word st;
  for (const auto& x0 : w) {
    Letter x = x0;
    if (x.kind == LetterKind::Rot) x = Letter::rot(norm_rot(x.data[0], n));
    if (is_trivial_factor(x, n)) continue;
    if (!st.empty() && x.is_factor() && st.back().kind == x.kind) {
      Letter m = merge(st.back(), x, n);
      st.pop_back();
      if (!is_trivial_factor(m, n)) st.push_back(std::move(m));
      continue;
    }
    if (!st.empty() && !x.is_factor() && st.back() == x.inverse()) {
      st.pop_back();
      continue;
    }
    st.push_back(std::move(x));
  }
  return st;
}

Word cyclic_class(const Word& w, int n) {
  Word r = reduce(w, n);
  while (r.size() >= 2) {
    const Letter& a = r.front();
    const Letter& z = r.back();
    if (a.is_factor() && z.kind == a.kind) {
      Letter m = merge(z, a, n);
      r.pop_back();
      r.erase(r.begin());
      if (!is_trivial_factor(m, n)) r.insert(r.begin(), m);
      continue;
    }
    if (!a.is_factor() && z == a.inverse()) {
      r.pop_back();
      r.erase(r.begin());
      continue;
    }
    break;
  }
  if (r.empty()) return r;
  Word best;
  bool first = true;
  for (const Word& base : {r, inverse(r)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

std::vector<int> reduced_word(const Permutation& w0) {
  Permutation w = w0;
  const int n = w.size();
  std::vector<int> rec;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n; ++i) {
      if (w(i) > w(i + 1)) {
        w = w * Permutation::adjacent(n, i);
        rec.push_back(i);
        changed = true;
        break;
      }
    }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

}  // namespace cactus::groups
