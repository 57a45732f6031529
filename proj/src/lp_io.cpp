// Copyright 2026 The Orbikit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbikit/lp_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "orbikit/error.hpp"

namespace orbikit {
namespace {

constexpr int kTermsPerLine = 8;

// Least common multiple of the denominators in a row (terms and rhs), or 1
// if every value already has an exact decimal form.
mpz_class RowScale(const Terms& terms, const Rational* rhs) {
  std::string unused;
  bool decimal = rhs == nullptr || ToExactDecimal(*rhs, unused);
  for (const auto& [var, coef] : terms) {
    decimal = decimal && ToExactDecimal(coef, unused);
  }
  if (decimal) return 1;
  mpz_class l = rhs == nullptr ? mpz_class(1) : rhs->raw().get_den();
  for (const auto& [var, coef] : terms) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coef.raw().get_den_mpz_t());
  }
  return l;
}

std::string Decimal(const Rational& r) {
  std::string out;
  if (!ToExactDecimal(r, out)) {
    throw std::logic_error("value " + r.ToString() + " has no exact decimal");
  }
  return out;
}

Rational Scaled(const Rational& r, const mpz_class& scale) {
  return r * Rational(mpq_class(scale));
}

void WriteExpression(std::ostream& os, const LinearSystem& sys,
                     const Terms& terms, const mpz_class& scale) {
  int on_line = 0;
  bool first = true;
  for (const auto& [var, coef] : terms) {
    if (on_line == kTermsPerLine) {
      os << "\n  ";
      on_line = 0;
    }
    const Rational c = Scaled(coef, scale);
    const bool negative = c.Sign() < 0;
    const std::string mag = Decimal(negative ? -c : c);
    if (first) {
      os << (negative ? " - " : " ");
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != "1") os << mag << ' ';
    os << sys.variables()[static_cast<std::size_t>(var)].name;
    first = false;
    ++on_line;
  }
}

std::string BoundText(const std::optional<Rational>& r) {
  std::string out;
  if (!ToExactDecimal(*r, out)) {
    throw Error(ErrorCode::kInvalidInput,
                "bound " + r->ToString() + " has no exact decimal form");
  }
  return out;
}

void CheckStream(const std::ostream& os) {
  if (!os) throw Error(ErrorCode::kIo, "write failed");
}

// --- reading ---------------------------------------------------------------

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    const char c = line[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      if (k + 1 < line.size() && line[k + 1] == '=') {
        op += '=';
        ++k;
      }
      if (op == "=<") op = "<=";
      if (op == "=>") op = ">=";
      if (op == "<") op = "<=";
      if (op == ">") op = ">=";
      tokens.push_back(op);
      ++k;
    } else if (c == '+' || c == '-' || c == ':') {
      tokens.emplace_back(1, c);
      ++k;
    } else {
      const std::size_t start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) &&
             std::string("<>=+-:").find(line[k]) == std::string::npos) {
        ++k;
      }
      tokens.push_back(line.substr(start, k - start));
    }
  }
  return tokens;
}

bool IsNumber(const std::string& t) {
  return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '.');
}

bool IsSense(const std::string& t) { return t == "<=" || t == ">=" || t == "="; }

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, "LP parse error: " + what);
}

struct ParsedTerm {
  std::string var;
  Rational coef;
};

// Parses [sign] [number] name ... starting at pos, stopping at a sense token
// or the end.
std::vector<ParsedTerm> ParseExpression(const std::vector<std::string>& toks,
                                        std::size_t& pos) {
  std::vector<ParsedTerm> terms;
  while (pos < toks.size() && !IsSense(toks[pos])) {
    Rational sign(1);
    while (pos < toks.size() && (toks[pos] == "+" || toks[pos] == "-")) {
      if (toks[pos] == "-") sign = -sign;
      ++pos;
    }
    Rational coef(1);
    if (pos < toks.size() && IsNumber(toks[pos])) coef = Rational::Parse(toks[pos++]);
    if (pos >= toks.size() || IsSense(toks[pos]) || IsNumber(toks[pos])) {
      ParseError("expected variable name");
    }
    terms.push_back({toks[pos++], sign * coef});
  }
  return terms;
}

Rational ParseSignedNumber(const std::vector<std::string>& toks, std::size_t& pos) {
  Rational sign(1);
  while (pos < toks.size() && (toks[pos] == "+" || toks[pos] == "-")) {
    if (toks[pos] == "-") sign = -sign;
    ++pos;
  }
  if (pos >= toks.size() || !IsNumber(toks[pos])) ParseError("expected number");
  return sign * Rational::Parse(toks[pos++]);
}

struct RawBound {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

bool IsInfinity(const std::string& t) {
  const std::string l = Lower(t);
  return l == "inf" || l == "infinity";
}

// One bound statement per line: "x free", "x >= l", "x <= u", "l <= x <= u"
// with l possibly "-inf".
void ParseBoundLine(const std::vector<std::string>& toks,
                    std::vector<std::string>& order,
                    std::map<std::string, RawBound>& bounds) {
  auto touch = [&](const std::string& name) -> RawBound& {
    if (!bounds.count(name)) order.push_back(name);
    return bounds[name];
  };
  std::size_t pos = 0;
  if (toks.size() == 2 && Lower(toks[1]) == "free") {
    RawBound& b = touch(toks[0]);
    b.lower.reset();
    b.upper.reset();
    return;
  }
  // Leading "<number-or--inf> <=".
  std::optional<std::optional<Rational>> leading;
  if (toks[0] == "-" || toks[0] == "+" || IsNumber(toks[0])) {
    if ((toks[0] == "-" || toks[0] == "+") && toks.size() > 1 && IsInfinity(toks[1])) {
      leading = std::optional<Rational>();
      pos = 2;
    } else {
      leading = ParseSignedNumber(toks, pos);
    }
    if (pos >= toks.size() || toks[pos] != "<=") ParseError("bad bound");
    ++pos;
  }
  if (pos >= toks.size()) ParseError("bad bound");
  RawBound& b = touch(toks[pos++]);
  if (leading) b.lower = *leading;
  if (pos == toks.size()) return;
  const std::string op = toks[pos++];
  std::optional<Rational> value;
  if (pos + 1 < toks.size() && (toks[pos] == "+" || toks[pos] == "-") &&
      IsInfinity(toks[pos + 1])) {
    pos += 2;
  } else {
    value = ParseSignedNumber(toks, pos);
  }
  if (pos != toks.size()) ParseError("trailing tokens in bound");
  if (op == "<=") {
    b.upper = value;
  } else if (op == ">=") {
    b.lower = value;
  } else if (op == "=") {
    b.lower = value;
    b.upper = value;
  } else {
    ParseError("bad bound operator");
  }
}

}  // namespace

bool ToExactDecimal(const Rational& r, std::string& out) {
  mpz_class den = r.raw().get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return false;
  const unsigned long digits = std::max(twos, fives);
  if (digits == 0) {
    out = r.raw().get_num().get_str();
    return true;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = r.raw().get_num() * scale / r.raw().get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  out = (negative ? "-" : "") + s;
  return true;
}

void WriteLp(const LinearSystem& sys, std::ostream& os, const std::string& name) {
  os << "\\ " << name << "\n";
  const auto& objective = sys.objective();
  os << ((!objective || objective->maximize) ? "Maximize" : "Minimize") << "\n";
  if (objective) {
    const mpz_class scale = RowScale(objective->terms, nullptr);
    if (scale != 1) os << "\\ scale obj " << scale.get_str() << "\n";
    os << " obj:";
    WriteExpression(os, sys, objective->terms, scale);
    os << "\n";
  } else {
    os << " obj:\n";
  }
  os << "Subject To\n";
  for (const Constraint& c : sys.constraints()) {
    const mpz_class scale = RowScale(c.terms, &c.rhs);
    if (scale != 1) os << "\\ scale " << c.name << " " << scale.get_str() << "\n";
    os << " " << c.name << ":";
    if (c.terms.empty()) {
      // A row whose terms all cancelled; keep it as 0 <sense> rhs.
      os << " 0 " << sys.variables().front().name;
    }
    WriteExpression(os, sys, c.terms, scale);
    os << " " << SenseSymbol(c.sense) << " " << Decimal(Scaled(c.rhs, scale))
       << "\n";
  }
  os << "Bounds\n";
  for (const Variable& v : sys.variables()) {
    if (!v.lower && !v.upper) {
      os << " " << v.name << " free\n";
    } else if (!v.lower) {
      os << " -inf <= " << v.name << " <= " << BoundText(v.upper) << "\n";
    } else if (!v.upper) {
      os << " " << v.name << " >= " << BoundText(v.lower) << "\n";
    } else {
      os << " " << BoundText(v.lower) << " <= " << v.name
         << " <= " << BoundText(v.upper) << "\n";
    }
  }
  os << "End\n";
  CheckStream(os);
}

namespace {

std::string Field(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return s + std::string(width - s.size(), ' ');
}

// Fixed MPS layout: fields start in columns 2, 5, 15, 25.
void MpsLine(std::ostream& os, const std::string& f1, const std::string& f2,
             const std::string& f3 = {}, const std::string& f4 = {}) {
  std::string line = " " + Field(f1, 2) + " " + Field(f2, 8);
  if (!f3.empty()) line += "  " + Field(f3, 8);
  if (!f4.empty()) line += "  " + f4;
  while (!line.empty() && line.back() == ' ') line.pop_back();
  os << line << "\n";
}

}  // namespace

void WriteMps(const LinearSystem& sys, std::ostream& os, const std::string& name) {
  bool long_names = name.size() > 8;
  for (const Variable& v : sys.variables()) long_names = long_names || v.name.size() > 8;
  for (const Constraint& c : sys.constraints()) long_names = long_names || c.name.size() > 8;

  os << "* " << name << "\n";
  if (long_names) os << "* names longer than 8 characters: read as free MPS\n";

  const auto& objective = sys.objective();
  const mpz_class obj_scale =
      objective ? RowScale(objective->terms, nullptr) : mpz_class(1);
  std::vector<mpz_class> scales;
  scales.reserve(sys.num_constraints());
  for (const Constraint& c : sys.constraints()) scales.push_back(RowScale(c.terms, &c.rhs));
  if (obj_scale != 1) os << "* scale obj " << obj_scale.get_str() << "\n";
  for (std::size_t r = 0; r < scales.size(); ++r) {
    if (scales[r] != 1) {
      os << "* scale " << sys.constraints()[r].name << " " << scales[r].get_str() << "\n";
    }
  }

  os << "NAME          " << name << "\n";
  if (objective && objective->maximize) os << "OBJSENSE\n    MAX\n";
  os << "ROWS\n";
  MpsLine(os, "N", "obj");
  for (const Constraint& c : sys.constraints()) {
    const char* type = c.sense == Sense::kLessEqual ? "L"
                       : c.sense == Sense::kEqual   ? "E"
                                                    : "G";
    MpsLine(os, type, c.name);
  }

  // Column-major entries: objective first, then rows in order.
  std::vector<std::vector<std::pair<std::string, std::string>>> columns(sys.num_vars());
  if (objective) {
    for (const auto& [var, coef] : objective->terms) {
      columns[static_cast<std::size_t>(var)].emplace_back("obj",
                                                          Decimal(Scaled(coef, obj_scale)));
    }
  }
  for (std::size_t r = 0; r < sys.num_constraints(); ++r) {
    const Constraint& c = sys.constraints()[r];
    for (const auto& [var, coef] : c.terms) {
      columns[static_cast<std::size_t>(var)].emplace_back(c.name,
                                                          Decimal(Scaled(coef, scales[r])));
    }
  }
  os << "COLUMNS\n";
  for (std::size_t v = 0; v < sys.num_vars(); ++v) {
    const std::string& var = sys.variables()[v].name;
    if (columns[v].empty()) MpsLine(os, "", var, "obj", "0");
    for (const auto& [row, value] : columns[v]) MpsLine(os, "", var, row, value);
  }
  os << "RHS\n";
  for (std::size_t r = 0; r < sys.num_constraints(); ++r) {
    const Constraint& c = sys.constraints()[r];
    if (c.rhs.IsZero()) continue;
    MpsLine(os, "", "RHS", c.name, Decimal(Scaled(c.rhs, scales[r])));
  }
  os << "BOUNDS\n";
  for (const Variable& v : sys.variables()) {
    if (!v.lower && !v.upper) {
      MpsLine(os, "FR", "BND", v.name);
      continue;
    }
    if (!v.lower) {
      MpsLine(os, "MI", "BND", v.name);
    } else if (!v.lower->IsZero()) {
      MpsLine(os, "LO", "BND", v.name, BoundText(v.lower));
    }
    if (v.upper) MpsLine(os, "UP", "BND", v.name, BoundText(v.upper));
  }
  os << "ENDATA\n";
  CheckStream(os);
}

void Emit(const LinearSystem& system, FileFormat format, std::ostream& os,
          const std::string& name) {
  if (format == FileFormat::kLp) {
    WriteLp(system, os, name);
  } else {
    WriteMps(system, os, name);
  }
}

LinearSystem ReadLp(std::istream& is) {
  enum class Section { kNone, kObjective, kRows, kBounds, kEnd };
  Section section = Section::kNone;
  bool maximize = true;
  std::map<std::string, Rational> scales;
  std::vector<std::string> obj_tokens;
  std::vector<std::string> row_tokens;
  std::vector<std::string> bound_order;
  std::map<std::string, RawBound> bounds;

  std::string line;
  while (std::getline(is, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '\\') {
      std::istringstream comment(trimmed.substr(1));
      std::string word, row, factor;
      if (comment >> word >> row >> factor && word == "scale") {
        scales[row] = Rational::Parse(factor);
      }
      continue;
    }
    const std::string key = Lower(trimmed);
    if (key == "maximize" || key == "maximum" || key == "max") {
      section = Section::kObjective;
      maximize = true;
      continue;
    }
    if (key == "minimize" || key == "minimum" || key == "min") {
      section = Section::kObjective;
      maximize = false;
      continue;
    }
    if (key == "subject to" || key == "such that" || key == "st" || key == "s.t.") {
      section = Section::kRows;
      continue;
    }
    if (key == "bounds" || key == "bound") {
      section = Section::kBounds;
      continue;
    }
    if (key == "end") {
      section = Section::kEnd;
      continue;
    }
    const std::vector<std::string> toks = Tokenize(trimmed);
    switch (section) {
      case Section::kObjective:
        obj_tokens.insert(obj_tokens.end(), toks.begin(), toks.end());
        break;
      case Section::kRows:
        row_tokens.insert(row_tokens.end(), toks.begin(), toks.end());
        break;
      case Section::kBounds:
        ParseBoundLine(toks, bound_order, bounds);
        break;
      case Section::kNone:
      case Section::kEnd:
        ParseError("content outside a section: '" + trimmed + "'");
    }
  }
  if (section != Section::kEnd) ParseError("missing End");

  auto unscale = [&](const std::string& row) {
    const auto it = scales.find(row);
    return it == scales.end() ? Rational(1) : it->second;
  };

  // Objective.
  std::vector<ParsedTerm> objective_terms;
  if (!obj_tokens.empty()) {
    std::size_t pos = 0;
    if (obj_tokens.size() >= 2 && obj_tokens[1] == ":") pos = 2;
    objective_terms = ParseExpression(obj_tokens, pos);
    if (pos != obj_tokens.size()) ParseError("trailing tokens in objective");
  }

  struct ParsedRow {
    std::string name;
    std::vector<ParsedTerm> terms;
    Sense sense;
    Rational rhs;
  };
  std::vector<ParsedRow> rows;
  for (std::size_t pos = 0; pos < row_tokens.size();) {
    if (pos + 1 >= row_tokens.size() || row_tokens[pos + 1] != ":") {
      ParseError("rows must be named");
    }
    ParsedRow row;
    row.name = row_tokens[pos];
    pos += 2;
    row.terms = ParseExpression(row_tokens, pos);
    if (pos >= row_tokens.size()) ParseError("row " + row.name + " lacks a sense");
    const std::string& op = row_tokens[pos++];
    row.sense = op == "<=" ? Sense::kLessEqual
                : op == "=" ? Sense::kEqual
                            : Sense::kGreaterEqual;
    row.rhs = ParseSignedNumber(row_tokens, pos);
    rows.push_back(std::move(row));
  }

  LinearSystem sys;
  for (const std::string& name : bound_order) {
    const RawBound& b = bounds[name];
    sys.AddVariable(name, b.lower, b.upper);
  }
  auto var = [&](const std::string& name) {
    if (auto index = sys.FindVariable(name)) return *index;
    return sys.AddVariable(name, Rational(0));
  };

  if (!objective_terms.empty()) {
    Objective obj;
    obj.maximize = maximize;
    const Rational s = unscale("obj");
    for (const ParsedTerm& t : objective_terms) obj.terms.emplace_back(var(t.var), t.coef / s);
    sys.SetObjective(std::move(obj));
  }
  for (ParsedRow& row : rows) {
    const Rational s = unscale(row.name);
    Terms terms;
    for (const ParsedTerm& t : row.terms) terms.emplace_back(var(t.var), t.coef / s);
    sys.AddConstraint(row.name, std::move(terms), row.sense, row.rhs / s);
  }
  return sys;
}

}  // namespace orbikit
