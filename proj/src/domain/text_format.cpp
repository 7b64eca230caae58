#include "scott/domain/text_format.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace scott::domain {

FormatError::FormatError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string line(text.substr(pos, end - pos));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens(line);
    if (!toks.empty()) fn(lineno, toks);
    pos = end + 1;
  }
}

}  // namespace

FinPoset parse_poset(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pending;
  std::vector<std::size_t> pending_lines;
  for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& t) {
    if (t[0] == "elem") {
      if (t.size() != 2) throw FormatError(lineno, "expected `elem <name>`");
      names.push_back(t[1]);
    } else if (t[0] == "le") {
      if (t.size() != 3) throw FormatError(lineno, "expected `le <a> <b>`");
      pending.emplace_back(t[1], t[2]);
      pending_lines.push_back(lineno);
    } else {
      throw FormatError(lineno, "unknown directive '" + t[0] + "'");
    }
  });
  auto index_of = [&](const std::string& name, std::size_t lineno) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw FormatError(lineno, "undeclared element '" + name + "'");
  };
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t i = 0; i < pending.size(); ++i)
    pairs.emplace_back(index_of(pending[i].first, pending_lines[i]),
                       index_of(pending[i].second, pending_lines[i]));
  return FinPoset::from_generators(std::move(names), pairs);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FinPoset read_poset_file(const std::string& path) {
  return parse_poset(read_file(path));
}

MonoMap parse_map(std::string_view text, const PosetRef& source,
                  const PosetRef& target) {
  std::vector<std::optional<Elem>> table(source->size());
  for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& t) {
    if (t[0] != "map" || t.size() != 3)
      throw FormatError(lineno, "expected `map <a> <b>`");
    auto a = source->find(t[1]);
    if (!a) throw FormatError(lineno, "unknown source element '" + t[1] + "'");
    auto b = target->find(t[2]);
    if (!b) throw FormatError(lineno, "unknown target element '" + t[2] + "'");
    if (table[*a]) throw FormatError(lineno, "'" + t[1] + "' mapped twice");
    table[*a] = *b;
  });
  std::vector<Elem> values;
  for (Elem x = 0; x < table.size(); ++x) {
    if (!table[x]) throw FormatError(0, "no image given for '" + source->name(x) + "'");
    values.push_back(*table[x]);
  }
  return MonoMap(source, target, std::move(values));
}

void write_poset(std::ostream& out, const FinPoset& p) {
  const std::size_t n = p.size();
  for (Elem a = 0; a < n; ++a) out << "elem " << p.name(a) << '\n';
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!p.lt(a, b)) continue;
      bool covers = true;
      for (Elem c = 0; c < n && covers; ++c)
        if (p.lt(a, c) && p.lt(c, b)) covers = false;
      if (covers) out << "le " << p.name(a) << ' ' << p.name(b) << '\n';
    }
}

}  // namespace scott::domain
