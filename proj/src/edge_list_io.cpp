#include "btwc/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "btwc/errors.hpp"

namespace btwc {

namespace {

long parse_id(const std::string& tok, long line_no) {
  if (tok.empty() || tok.size() > 9) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" +
                     tok + "'");
  }
  for (char c : tok)
    if (c < '0' || c > '9')
      throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" +
                       tok + "'");
  return std::stol(tok);
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
  EdgeListData data;
  bool saw_header = false;
  bool first_content = true;
  std::string line;
  long line_no = 0;
  long max_id = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a)) continue;  // blank

    if (first_content && a.rfind("n=", 0) == 0) {
      first_content = false;
      saw_header = true;
      long n = parse_id(a.substr(2), line_no);
      if (ss >> extra)
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing tokens after header");
      data.n = static_cast<Vertex>(n);
      continue;
    }
    first_content = false;

    if (!(ss >> b))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v', got '" + a + "'");
    if (ss >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
    long u = parse_id(a, line_no);
    long v = parse_id(b, line_no);
    max_id = std::max({max_id, u, v});
    data.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  if (!saw_header) {
    if (data.edges.empty()) throw ParseError("empty edge list");
    data.n = static_cast<Vertex>(max_id + 1);
  }
  return data;
}

EdgeListData read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.num_vertices()) + "\n";
  for (auto [u, v] : g.edge_list())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_edge_list(g);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace btwc
