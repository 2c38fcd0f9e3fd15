#include "gdlca/algebra_file.hpp"

#include "gdlca/error.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace gdlca {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool valid_basis_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '=' || c == ':' || c == '#' || c == ',' || static_cast<unsigned char>(c) <= ' ') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraFile run() {
    std::size_t pos = 0;
    bool header = false, have_name = false, have_basis = false;
    std::optional<std::size_t> declared_dim;
    std::size_t dim_line = 0;
    std::set<std::pair<std::string, std::string>> seen_nov, seen_lie;
    while (pos <= text_.size()) {
      const auto nl = text_.find('\n', pos);
      std::string_view raw = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_;
      pos = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string_view line = trim(raw);
      if (line.empty()) continue;
      last_line_ = line_;
      const auto tokens = split_ws(line);
      const std::string& key = tokens[0];

      if (!header) {
        if (key != "gdlca-algebra") fail("header", "expected 'gdlca-algebra " + std::to_string(kAlgebraFileVersion) + "'");
        if (tokens.size() != 2 || tokens[1] != std::to_string(kAlgebraFileVersion)) {
          fail("version", "unsupported format version");
        }
        header = true;
        continue;
      }
      if (key == "name") {
        if (have_name) fail("name", "duplicate name line");
        const std::string_view rest = trim(line.substr(4));
        if (rest.empty()) fail("name", "empty name");
        out_.name = std::string(rest);
        have_name = true;
      } else if (key == "dim") {
        if (declared_dim) fail("dim", "duplicate dim line");
        if (tokens.size() != 2) fail("dim", "expected one positive integer");
        std::size_t v = 0;
        for (char c : tokens[1]) {
          if (c < '0' || c > '9' || v > 100000) fail("dim", "expected one positive integer");
          v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        if (v == 0) fail("dim", "dimension must be positive");
        declared_dim = v;
        dim_line = line_;
      } else if (key == "basis") {
        if (have_basis) fail("basis", "duplicate basis line");
        if (tokens.size() < 2) fail("basis", "empty basis");
        std::set<std::string> names;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          if (!valid_basis_name(tokens[t])) fail("basis", "invalid basis name '" + tokens[t] + "'");
          if (!names.insert(tokens[t]).second) fail("basis", "duplicate basis name '" + tokens[t] + "'");
          index_[tokens[t]] = t - 1;
          out_.basis.push_back(tokens[t]);
        }
        have_basis = true;
      } else if (key == "novikov" || key == "lie") {
        if (!have_basis) fail(key, "entry before the basis line");
        AlgebraFile::Entry e = entry(key, line.substr(key.size()));
        const auto pair = std::make_pair(e.i, e.j);
        if (key == "lie") {
          if (index_.at(e.i) >= index_.at(e.j)) {
            fail("lie", "lie entry (" + e.i + "," + e.j + ") must list the earlier basis element first");
          }
          if (!seen_lie.insert(pair).second) fail("lie", "duplicate entry (" + e.i + "," + e.j + ")");
          out_.lie.push_back(std::move(e));
        } else {
          if (!seen_nov.insert(pair).second) fail("novikov", "duplicate entry (" + e.i + "," + e.j + ")");
          out_.novikov.push_back(std::move(e));
        }
      } else if (key == "meta") {
        if (tokens.size() < 2) fail("meta", "missing key");
        const std::string_view rest = trim(line.substr(4));
        const auto sp = rest.find_first_of(" \t");
        const std::string mkey(rest.substr(0, sp));
        const std::string value = sp == std::string_view::npos ? "" : std::string(trim(rest.substr(sp)));
        if (!out_.meta.emplace(mkey, value).second) fail("meta", "duplicate meta key '" + mkey + "'");
      } else {
        fail(key, "unknown directive '" + key + "'");
      }
    }
    line_ = std::max<std::size_t>(last_line_, 1);
    if (!header) fail("header", "empty document");
    if (!have_name) fail("name", "missing name line");
    if (!have_basis) fail("basis", "missing basis line");
    if (declared_dim && *declared_dim != out_.basis.size()) {
      throw ParseError(dim_line, "dim", "dim " + std::to_string(*declared_dim) + " does not match the " +
                                            std::to_string(out_.basis.size()) + " basis names");
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& field, const std::string& msg) const { throw ParseError(line_, field, msg); }

  void require_declared(const std::string& field, const std::string& name) const {
    if (!index_.count(name)) fail(field, "undeclared basis name '" + name + "'");
  }

  AlgebraFile::Entry entry(const std::string& kind, std::string_view rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail(kind, "expected 'I J : K=coeff ...'");
    const auto lhs = split_ws(rest.substr(0, colon));
    if (lhs.size() != 2) fail(kind, "expected exactly two basis names before ':'");
    require_declared(kind + ".i", lhs[0]);
    require_declared(kind + ".j", lhs[1]);
    AlgebraFile::Entry e{lhs[0], lhs[1], {}};
    std::set<std::string> outs;
    for (const auto& item : split_ws(rest.substr(colon + 1))) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(kind + ".value", "expected K=coeff, got '" + item + "'");
      const std::string k = item.substr(0, eq);
      require_declared(kind + ".value", k);
      if (!outs.insert(k).second) fail(kind + ".value", "basis name '" + k + "' repeated in one entry");
      try {
        e.value.emplace_back(k, parse_rational(item.substr(eq + 1)));
      } catch (const InputError& ex) {
        fail(kind + ".coeff", ex.what());
      }
    }
    return e;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::size_t last_line_ = 0;
  std::map<std::string, std::size_t> index_;
  AlgebraFile out_;
};

void emit_entry(std::ostringstream& os, const char* kind, const AlgebraFile::Entry& e) {
  os << kind << " " << e.i << " " << e.j << " :";
  for (const auto& [k, c] : e.value) os << " " << k << "=" << to_string(c);
  os << "\n";
}

}  // namespace

AlgebraFile parse_algebra_document(std::string_view text) { return Parser(text).run(); }

GDBialgebra to_bialgebra(const AlgebraFile& file, Validation validation) {
  const std::size_t n = file.basis.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[file.basis[i]] = i;
  StructureTable nov = zero_table(n), lie = zero_table(n);
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw InputError("undeclared basis name '" + s + "'");
    return it->second;
  };
  for (const auto& e : file.novikov) {
    const std::size_t i = lookup(e.i), j = lookup(e.j);
    for (const auto& [k, c] : e.value) nov[i][j][lookup(k)] += c;
  }
  for (const auto& e : file.lie) {
    const std::size_t i = lookup(e.i), j = lookup(e.j);
    if (i >= j) throw InputError("lie entry (" + e.i + "," + e.j + ") must have i before j");
    for (const auto& [k, c] : e.value) {
      lie[i][j][lookup(k)] += c;
      lie[j][i][lookup(k)] -= c;
    }
  }
  return gd_build(file.name, file.basis, nov, lie, validation);
}

GDBialgebra parse_algebra_file(std::string_view text, Validation validation) {
  return to_bialgebra(parse_algebra_document(text), validation);
}

AlgebraFile to_document(const GDBialgebra& a, std::map<std::string, std::string> meta) {
  AlgebraFile f;
  f.name = a.name();
  f.basis = a.basis_names();
  f.meta = std::move(meta);
  const std::size_t n = a.dim();
  auto make = [&](std::size_t i, std::size_t j, const VElem& v) {
    AlgebraFile::Entry e{a.basis_names()[i], a.basis_names()[j], {}};
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] != 0) e.value.emplace_back(a.basis_names()[k], v[k]);
    }
    return e;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const VElem& v = a.circ(i, j);
      if (!v.is_zero()) f.novikov.push_back(make(i, j, v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const VElem v = a.lie(i, j);
      if (!v.is_zero()) f.lie.push_back(make(i, j, v));
    }
  }
  return f;
}

std::string emit_algebra_file(const AlgebraFile& file) {
  std::ostringstream os;
  os << "gdlca-algebra " << kAlgebraFileVersion << "\n";
  os << "name " << file.name << "\n";
  os << "dim " << file.basis.size() << "\n";
  os << "basis";
  for (const auto& b : file.basis) os << " " << b;
  os << "\n";
  for (const auto& e : file.novikov) emit_entry(os, "novikov", e);
  for (const auto& e : file.lie) emit_entry(os, "lie", e);
  for (const auto& [k, v] : file.meta) os << "meta " << k << (v.empty() ? "" : " ") << v << "\n";
  return os.str();
}

std::string emit_algebra_file(const GDBialgebra& a, std::map<std::string, std::string> meta) {
  return emit_algebra_file(to_document(a, std::move(meta)));
}

}  // namespace gdlca
