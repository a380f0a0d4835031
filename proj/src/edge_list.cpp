#include "diffgraph/edge_list.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace diffgraph {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    // Accept "A->B" and "A-> B" as well as the spaced form.
    std::size_t pos = 0;
    while (true) {
      std::size_t arrow = tok.find("->", pos);
      if (arrow == std::string::npos) {
        if (pos < tok.size()) tokens.push_back(tok.substr(pos));
        break;
      }
      if (arrow > pos) tokens.push_back(tok.substr(pos, arrow - pos));
      tokens.emplace_back("->");
      pos = arrow + 2;
    }
  }
  return tokens;
}

class Builder {
 public:
  Vertex declare(const std::string& name, std::size_t line) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    if (!VariableId::is_valid(name)) throw ParseError(line, "invalid vertex name '" + name + "'");
    Vertex v = names_.size();
    names_.emplace_back(name);
    index_.emplace(name, v);
    return v;
  }

  void edge(Vertex tail, Vertex head, std::size_t line) {
    if (tail == head) throw ParseError(line, "self-loop on '" + names_[tail].str() + "'");
    edges_.push_back({tail, head});
  }

  DirectedGraph build() && { return DirectedGraph(std::move(names_), std::move(edges_)); }

 private:
  std::vector<VariableId> names_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::vector<Edge> edges_;
};

}  // namespace

DirectedGraph parse_edge_list(std::istream& in) {
  Builder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 2 && tokens[0] == "node") {
      builder.declare(tokens[1], line_no);
    } else if (tokens.size() == 3 && tokens[1] == "->" && tokens[0] != "->" && tokens[2] != "->") {
      Vertex tail = builder.declare(tokens[0], line_no);
      Vertex head = builder.declare(tokens[2], line_no);
      builder.edge(tail, head, line_no);
    } else {
      throw ParseError(line_no, "expected 'node <name>' or '<tail> -> <head>'");
    }
  }
  return std::move(builder).build();
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

DirectedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (const auto& v : g.vertices()) out << "node " << v.str() << '\n';
  for (const Edge& e : g.edges()) out << g.name(e.tail) << " -> " << g.name(e.head) << '\n';
}

std::string to_edge_list(const DirectedGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace diffgraph
