#include "gkm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gkm {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t rank, const Rat& value) {
  Polynomial f(rank);
  f.add_term(Exponents(rank, 0), value);
  return f;
}

Polynomial Polynomial::variable(std::size_t rank, std::size_t index) {
  if (index >= rank) throw Error(Errc::UnknownVariable, "variable index out of range");
  Polynomial f(rank);
  Exponents e(rank, 0);
  e[index] = 1;
  f.add_term(e, Rat(1));
  return f;
}

Polynomial Polynomial::linear_form(const Weight& w) {
  Polynomial f(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    Exponents e(w.size(), 0);
    e[i] = 1;
    f.add_term(e, to_rat(w[i]));
  }
  return f;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Terms are grlex-ordered, so the last one has maximal degree.
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = -1;
  for (const auto& [e, q] : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d == -1) d = de;
    if (de != d) return false;
  }
  return true;
}

Rat Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& coeff) {
  if (e.size() != rank_) throw Error(Errc::RankMismatch, "exponent vector of wrong length");
  // Guard against non-canonical fractions from the two-argument mpq_class
  // constructor; everything downstream assumes canonical values.
  Rat c = coeff;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(rank_);
  for (const auto& [e, q] : terms_) out.terms_.emplace(e, -q);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (rank_ != other.rank_) throw Error(Errc::RankMismatch, "adding polynomials of different rank");
  for (const auto& [e, q] : other.terms_) add_term(e, q);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (rank_ != other.rank_) throw Error(Errc::RankMismatch, "subtracting polynomials of different rank");
  for (const auto& [e, q] : other.terms_) add_term(e, -q);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, q] : terms_) q *= scalar;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.rank() != b.rank()) throw Error(Errc::RankMismatch, "multiplying polynomials of different rank");
  Polynomial out(a.rank());
  Exponents e(a.rank());
  for (const auto& [ea, qa] : a.terms()) {
    for (const auto& [eb, qb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, qa * qb);
    }
  }
  return out;
}

Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial out = constant(rank_, Rat(1));
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> out;
  for (const auto& [e, q] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial(rank_)).first;
    it->second.add_term(e, q);
  }
  return out;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out(rank_);
  for (const auto& [e, q] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.add_term(e, q);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != rank_) throw Error(Errc::RankMismatch, "substitute: one image per variable");
  std::size_t target = rank_ == 0 ? 0 : images.front().rank();
  for (const auto& f : images) {
    if (f.rank() != target) throw Error(Errc::RankMismatch, "substitute: images of mixed rank");
  }
  // Cache powers of each image as needed.
  std::vector<std::vector<Polynomial>> powers(rank_);
  for (std::size_t i = 0; i < rank_; ++i) powers[i].push_back(Polynomial::constant(target, Rat(1)));
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k) {
      powers[i].push_back(powers[i].back() * images[i]);
    }
    return powers[i][static_cast<std::size_t>(k)];
  };

  Polynomial out(target);
  for (const auto& [e, q] : terms_) {
    Polynomial term = Polynomial::constant(target, q);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, q] = *it;
    Rat qa = q;
    if (first) {
      if (q < 0) {
        os << "-";
        qa = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      qa = abs(q);
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rat_to_string(qa);
    } else if (qa == 1) {
      os << mono;
    } else {
      os << rat_to_string(qa) << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::vector<Exponents> monomials_of_degree(std::size_t rank, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents cur(rank, 0);
  // Descending lex within the fixed degree: x1-heavy first.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == rank) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (rank == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

GradedPiece graded_piece(std::size_t rank, int d) {
  return GradedPiece{d, monomials_of_degree(rank, d)};
}

RatVec coefficient_vector(const Polynomial& f, const GradedPiece& piece) {
  RatVec v;
  v.reserve(piece.monomials.size());
  for (const auto& e : piece.monomials) v.push_back(f.coefficient(e));
  return v;
}

Polynomial polynomial_from_coefficients(std::size_t rank, const GradedPiece& piece,
                                        const RatVec& coeffs) {
  if (coeffs.size() != piece.monomials.size()) {
    throw Error(Errc::BadArgument, "coefficient vector has wrong length");
  }
  Polynomial f(rank);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(piece.monomials[i], coeffs[i]);
  return f;
}

Polynomial weyl_apply(const WeylElement& w, const Polynomial& f) {
  if (w.rank() != f.rank()) throw Error(Errc::RankMismatch, "weyl_apply: rank mismatch");
  std::vector<Polynomial> images;
  images.reserve(w.rank());
  for (std::size_t j = 0; j < w.rank(); ++j) {
    Weight col = Weight::zero(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) col.c[i] = w.m[i][j];
    images.push_back(Polynomial::linear_form(col));
  }
  return f.substitute(images);
}

std::optional<int> divisibility_order(const Polynomial& f, const Weight& chi) {
  if (chi.size() != f.rank()) throw Error(Errc::RankMismatch, "divisibility_order: rank mismatch");
  auto [p, scale] = primitive_part(chi);  // throws ZeroWeight on 0
  if (scale != 1) {
    throw Error(Errc::NotPrimitive, "weight " + to_string(chi) + " is not primitive");
  }
  if (f.is_zero()) return std::nullopt;
  auto [fwd, inv] = extend_to_unimodular_basis_with_inverse(chi);
  // x = M^{-1} y rewrites f with y1 = chi.
  std::vector<Polynomial> images;
  images.reserve(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    images.push_back(Polynomial::linear_form(Weight(inv.m[i])));
  }
  Polynomial g = f.substitute(images);
  int best = -1;
  for (const auto& [e, q] : g.terms()) {
    if (best == -1 || e[0] < best) best = e[0];
  }
  return best;
}

std::vector<Polynomial> invariant_basis(const FiniteMatrixGroup& g, int degree) {
  const std::size_t r = g.rank();
  GradedPiece piece = graded_piece(r, degree);
  Rat inv_order(1, static_cast<unsigned long>(g.order()));
  std::vector<RatVec> rows;
  rows.reserve(piece.dimension());
  for (const auto& e : piece.monomials) {
    Polynomial mono(r);
    mono.add_term(e, Rat(1));
    Polynomial avg(r);
    for (const auto& w : g.elements) avg += weyl_apply(w, mono);
    avg *= inv_order;
    rows.push_back(coefficient_vector(avg, piece));
  }
  RrefResult rr = rref_kernel(RationalMatrix::from_rows(std::move(rows), piece.dimension()));
  std::vector<Polynomial> basis;
  basis.reserve(rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    basis.push_back(polynomial_from_coefficients(r, piece, rr.rref.a[i]));
  }
  return basis;
}

namespace {

// ---- expression parser ----------------------------------------------------

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
  std::size_t pos = 0;       // 1-based character position
  std::string text;          // Int digits
  std::size_t var_index = 0; // Var: 1-based as written
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{Token::End, i_ + 1, "", 0};
    if (i_ >= text_.size()) return;
    char c = text_[i_];
    std::size_t start = i_;
    switch (c) {
      case '+': tok_ = {Token::Plus, start + 1, "", 0}; ++i_; return;
      case '-': tok_ = {Token::Minus, start + 1, "", 0}; ++i_; return;
      case '*': tok_ = {Token::Star, start + 1, "", 0}; ++i_; return;
      case '^': tok_ = {Token::Caret, start + 1, "", 0}; ++i_; return;
      case '/': tok_ = {Token::Slash, start + 1, "", 0}; ++i_; return;
      case '(': tok_ = {Token::LParen, start + 1, "", 0}; ++i_; return;
      case ')': tok_ = {Token::RParen, start + 1, "", 0}; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_ = {Token::Int, start + 1, text_.substr(i_, j - i_), 0};
      i_ = j;
      return;
    }
    if (c == 'x') {
      std::size_t j = i_ + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j == i_ + 1) {
        throw Error(Errc::ParseError, "expected variable index after 'x' at position " +
                                          std::to_string(start + 1),
                    start + 1);
      }
      std::size_t idx = std::stoul(text_.substr(i_ + 1, j - i_ - 1));
      tok_ = {Token::Var, start + 1, "", idx};
      i_ = j;
      return;
    }
    throw Error(Errc::ParseError,
                std::string("unexpected character '") + c + "' at position " +
                    std::to_string(start + 1),
                start + 1);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_{Token::End, 0, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, std::size_t rank) : lex_(text), rank_(rank) {}

  Polynomial parse() {
    Polynomial f = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) {
      throw Error(Errc::ParseError, "unexpected token at position " + std::to_string(t.pos), t.pos);
    }
    return f;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      Token op = lex_.take();
      Polynomial rhs = term();
      if (op.kind == Token::Plus) {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -factor();
    }
    if (lex_.peek().kind == Token::Plus) {
      lex_.take();
      return factor();
    }
    Polynomial base = atom();
    if (lex_.peek().kind == Token::Caret) {
      Token caret = lex_.take();
      if (lex_.peek().kind != Token::Int) {
        throw Error(Errc::ParseError,
                    "exponent must be a nonnegative integer literal at position " +
                        std::to_string(lex_.peek().pos),
                    lex_.peek().pos);
      }
      Token e = lex_.take();
      unsigned long n = 0;
      try {
        n = std::stoul(e.text);
      } catch (const std::exception&) {
        n = static_cast<unsigned long>(-1);
      }
      if (n > 4096) {
        throw Error(Errc::ParseError, "exponent too large at position " + std::to_string(e.pos),
                    e.pos);
      }
      (void)caret;
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  Polynomial atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Int: {
        Rat num(t.text);
        if (lex_.peek().kind == Token::Slash) {
          lex_.take();
          if (lex_.peek().kind != Token::Int) {
            throw Error(Errc::ParseError,
                        "expected integer denominator at position " +
                            std::to_string(lex_.peek().pos),
                        lex_.peek().pos);
          }
          Token den = lex_.take();
          Rat d(den.text);
          if (d == 0) {
            throw Error(Errc::ParseError, "zero denominator at position " + std::to_string(den.pos),
                        den.pos);
          }
          num /= d;
        }
        return Polynomial::constant(rank_, num);
      }
      case Token::Var: {
        if (t.var_index < 1 || t.var_index > rank_) {
          throw Error(Errc::UnknownVariable,
                      "unknown variable x" + std::to_string(t.var_index) + " at position " +
                          std::to_string(t.pos) + " (rank " + std::to_string(rank_) + ")",
                      t.pos);
        }
        return Polynomial::variable(rank_, t.var_index - 1);
      }
      case Token::LParen: {
        Polynomial inner = expr();
        if (lex_.peek().kind != Token::RParen) {
          throw Error(Errc::ParseError,
                      "expected ')' at position " + std::to_string(lex_.peek().pos),
                      lex_.peek().pos);
        }
        lex_.take();
        return inner;
      }
      default:
        throw Error(Errc::ParseError, "unexpected token at position " + std::to_string(t.pos),
                    t.pos);
    }
  }

  Lexer lex_;
  std::size_t rank_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t rank) {
  return Parser(text, rank).parse();
}

}  // namespace gkm
