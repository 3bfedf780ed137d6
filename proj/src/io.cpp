#include "posetdim/io.hpp"

#include <sstream>

#include "json.hpp"

namespace posetdim {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

// Lines of the text, without their terminators.
std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      if (i == text.size() && i == start) break;  // no trailing empty line
      std::string_view line = text.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.emplace_back(line);
      start = i + 1;
    }
  }
  return lines;
}

}  // namespace

Poset parse_poset_text(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<ElementId, ElementId>> relations;

  // Incremental reachability so a cycle is reported at the line closing it.
  std::vector<std::vector<bool>> reach;
  auto grow = [&]() {
    for (auto& row : reach) row.push_back(false);
    reach.emplace_back(labels.size() + 1, false);
  };

  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const int lineno = int(ln + 1);
    auto tokens = split_tokens(lines[ln]);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "elements") {
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (index.count(tokens[i]))
          raise(errc::parse_error, "element '" + tokens[i] + "' declared twice",
                lineno);
        index.emplace(tokens[i], int(labels.size()));
        labels.push_back(tokens[i]);
        grow();
      }
    } else if (tokens[0] == "rel") {
      if (tokens.size() != 3)
        raise(errc::parse_error, "rel takes exactly two elements", lineno);
      auto look = [&](const std::string& t) {
        auto it = index.find(t);
        if (it == index.end())
          raise(errc::parse_error, "unknown element '" + t + "'", lineno);
        return it->second;
      };
      int a = look(tokens[1]), b = look(tokens[2]);
      if (a == b || reach[size_t(b)][size_t(a)])
        raise(errc::parse_error,
              "relation " + tokens[1] + " < " + tokens[2] + " closes a cycle",
              lineno);
      relations.emplace_back(a, b);
      const int n = int(labels.size());
      for (int u = 0; u < n; ++u) {
        if (u != a && !reach[size_t(u)][size_t(a)]) continue;
        auto& row = reach[size_t(u)];
        row[size_t(b)] = true;
        for (int v = 0; v < n; ++v)
          if (reach[size_t(b)][size_t(v)]) row[size_t(v)] = true;
      }
    } else {
      raise(errc::parse_error, "expected 'elements' or 'rel', got '" + tokens[0] + "'",
            lineno);
    }
  }
  return build_poset_ids(std::move(labels), relations);
}

std::string format_poset_text(const Poset& p) {
  std::string out;
  if (p.size() == 0) return out;
  out += "elements";
  for (const std::string& l : p.labels()) {
    out += ' ';
    out += l;
  }
  out += '\n';
  for (auto [a, b] : p.covers()) {
    out += "rel ";
    out += p.label(a);
    out += ' ';
    out += p.label(b);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_realizer_tokens(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("words") || !doc["words"].is_array())
      raise(errc::parse_error, "malformed realizer document", 1);
    std::vector<std::vector<std::string>> words;
    for (const auto& word : doc["words"]) {
      if (!word.is_array())
        raise(errc::parse_error, "malformed realizer document", 1);
      std::vector<std::string> tokens;
      for (const auto& tok : word) {
        if (!tok.is_string())
          raise(errc::parse_error, "malformed realizer document", 1);
        tokens.push_back(tok.get<std::string>());
      }
      words.push_back(std::move(tokens));
    }
    return words;
  }
  std::vector<std::vector<std::string>> words;
  for (const std::string& line : split_lines(text)) words.push_back(split_tokens(line));
  return words;
}

std::string format_realizer_text(const Poset& p, const Realizer& r) {
  std::string out;
  for (const Word& w : r) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += p.label(w[size_t(i)]);
    }
    out += '\n';
  }
  return out;
}

std::string format_realizer_machine(const Poset& p, const Realizer& r,
                                    bool verified) {
  nlohmann::ordered_json doc;
  doc["elements"] = p.labels();
  auto& words = doc["words"] = nlohmann::ordered_json::array();
  for (const Word& w : r) {
    nlohmann::ordered_json word = nlohmann::ordered_json::array();
    for (ElementId e : w) word.push_back(p.label(e));
    words.push_back(std::move(word));
  }
  doc["verified"] = verified;
  return doc.dump() + "\n";
}

std::string to_dot(const Poset& p) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    out += '"';
    return out;
  };
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (const std::string& l : p.labels()) out << "  " << quoted(l) << ";\n";
  for (auto [a, b] : p.covers())
    out << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posetdim
