#include "classspec.hpp"

#include <cctype>

#include "error.hpp"

namespace ptx {

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  explicit Scanner(const std::string& text) : s(text) {}

  int column() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void err(const std::string& msg) const {
    fail(Errc::ParseError, "col " + std::to_string(column()) + ": " + msg, column());
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '_'))
      ++pos;
    if (pos == start) err("expected identifier");
    return s.substr(start, pos - start);
  }
  i64 integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      err("expected integer");
    }
    return std::atoll(s.substr(start, pos - start).c_str());
  }
  IVec int_list() {
    IVec v;
    v.push_back(integer());
    while (eat(',')) v.push_back(integer());
    return v;
  }
  void end() {
    skip_ws();
    if (pos != s.size()) err("unexpected trailing input");
  }
};

}  // namespace

CurveClass parse_class_spec(const std::string& text) {
  Scanner sc(text);
  std::string model = sc.ident();
  for (auto& c : model) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  bool perm = false;
  if (model.rfind("PERM-", 0) == 0) {
    perm = true;
    model = model.substr(5);
  }
  ModelKind kind;
  if (model == "P3")
    kind = ModelKind::P3;
  else if (model == "CUBE")
    kind = ModelKind::Cube;
  else
    sc.err("unknown model '" + model + "' (expected P3, CUBE, PERM-P3, PERM-CUBE)");

  sc.expect('(');
  std::string kw = sc.ident();
  if (kw != "k") sc.err("expected 'k='");
  sc.expect('=');
  i64 k = sc.integer();
  sc.expect(')');
  sc.expect(':');
  if (k < 0) sc.err("k must be nonnegative");
  if (perm && kind == ModelKind::P3 && k < 4) sc.err("PERM-P3 needs k >= 4");
  if (perm && kind == ModelKind::Cube && k < 2) sc.err("PERM-CUBE needs k >= 2");

  ClassBasis basis;
  if (perm)
    basis = kind == ModelKind::P3 ? ClassBasis::perm_p3(static_cast<int>(k))
                                  : ClassBasis::perm_cube(static_cast<int>(k));
  else
    basis = kind == ModelKind::P3 ? ClassBasis::p3_side(static_cast<int>(k))
                                  : ClassBasis::cube_side(static_cast<int>(k));

  IVec d, a, b;
  bool have_a = false, have_b = false;
  std::string g = sc.ident();
  if (g != "d") sc.err("class must start with the d group");
  sc.expect('=');
  d = sc.int_list();
  while (sc.eat(';')) {
    sc.skip_ws();
    int gcol = sc.column();
    std::string name = sc.ident();
    sc.expect('=');
    if (name == "a" && !have_a && !have_b) {
      a = sc.int_list();
      have_a = true;
    } else if (name == "b" && !have_b) {
      b = sc.int_list();
      have_b = true;
    } else {
      fail(Errc::ParseError, "col " + std::to_string(gcol) + ": unexpected group '" + name + "'",
           gcol);
    }
  }
  sc.end();

  auto expand_shorthand = [](IVec& v, size_t want) {
    if (v.size() == 1 && v[0] == 0) v.assign(want, 0);
  };
  if (static_cast<size_t>(basis.degree_slots()) != d.size())
    fail(Errc::ParseError,
         "d group needs " + std::to_string(basis.degree_slots()) + " coefficients", 1);
  if (!have_a) a.assign(basis.points, 0);
  expand_shorthand(a, basis.points);
  if (a.size() != static_cast<size_t>(basis.points))
    fail(Errc::ParseError, "a group needs " + std::to_string(basis.points) + " coefficients", 1);
  if (have_b && !basis.lines) {
    expand_shorthand(b, 6);
    for (i64 x : b)
      if (x != 0)
        fail(Errc::ParseError, "b coefficients require a PERM model", 1);
    b.clear();
  }
  if (basis.lines) {
    if (!have_b) b.assign(6, 0);
    expand_shorthand(b, 6);
    if (b.size() != 6) fail(Errc::ParseError, "b group needs 6 coefficients", 1);
  }

  IVec tuple = d;
  tuple.insert(tuple.end(), a.begin(), a.end());
  tuple.insert(tuple.end(), b.begin(), b.end());
  return curve_from_tuple(basis, tuple);
}

}  // namespace ptx
