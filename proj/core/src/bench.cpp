#include "netfuzz/bench.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace netfuzz {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view src, int line, const std::string& what) {
  throw ParseError(std::string(src) + ":" + std::to_string(line) + ": " + what);
}

// INPUT(a) / OUTPUT(y): keyword match is case-insensitive.
bool keyword_decl(std::string_view line, std::string_view keyword, std::string_view& arg) {
  if (line.size() < keyword.size() + 2) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(line[i])) != keyword[i]) return false;
  std::string_view rest = strip(line.substr(keyword.size()));
  if (rest.empty() || rest.front() != '(' || rest.back() != ')') return false;
  arg = strip(rest.substr(1, rest.size() - 2));
  return true;
}

}  // namespace

Netlist parse_bench(std::string_view text, std::string_view name) {
  NetlistBuilder builder{std::string(name)};
  std::vector<std::pair<NetId, int>> outputs;  // declared before drivers exist

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    std::string_view arg;
    if (keyword_decl(line, "INPUT", arg)) {
      if (arg.empty()) fail(name, lineno, "empty INPUT declaration");
      builder.mark_input(builder.add_net(arg, lineno), lineno);
      continue;
    }
    if (keyword_decl(line, "OUTPUT", arg)) {
      if (arg.empty()) fail(name, lineno, "empty OUTPUT declaration");
      outputs.emplace_back(builder.add_net(arg, lineno), lineno);
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(name, lineno, "expected INPUT/OUTPUT declaration or gate assignment");
    const std::string_view lhs = strip(line.substr(0, eq));
    std::string_view rhs = strip(line.substr(eq + 1));
    if (lhs.empty()) fail(name, lineno, "missing output net before '='");

    // KIND(a, b, ...) — constants may omit the parentheses.
    std::string_view kind_text = rhs;
    std::vector<NetId> inputs;
    const std::size_t open = rhs.find('(');
    if (open != std::string_view::npos) {
      if (rhs.back() != ')') fail(name, lineno, "missing ')'");
      kind_text = strip(rhs.substr(0, open));
      std::string_view args = rhs.substr(open + 1, rhs.size() - open - 2);
      while (true) {
        args = strip(args);
        if (args.empty()) break;
        const std::size_t comma = args.find(',');
        const std::string_view tok = strip(args.substr(0, comma));
        if (tok.empty()) fail(name, lineno, "empty operand in gate input list");
        inputs.push_back(builder.add_net(tok, lineno));
        if (comma == std::string_view::npos) break;
        args = args.substr(comma + 1);
      }
    }

    const auto kind = gate_kind_from(kind_text);
    if (!kind) fail(name, lineno, "unknown gate kind '" + std::string(kind_text) + "'");
    if (!arity_ok(*kind, inputs.size()))
      fail(name, lineno,
           std::string(to_string(*kind)) + " with " + std::to_string(inputs.size()) +
               " input(s)");
    builder.add_gate(*kind, builder.add_net(lhs, lineno), std::move(inputs), lineno);
  }

  for (auto [net, line] : outputs) builder.mark_output(net);
  try {
    return builder.finish();
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

Netlist parse_bench_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open netlist file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = path;
  if (const std::size_t slash = base.find_last_of('/'); slash != std::string::npos)
    base = base.substr(slash + 1);
  if (const std::size_t dot = base.find_last_of('.'); dot != std::string::npos)
    base = base.substr(0, dot);
  return parse_bench(buf.str(), base);
}

std::string write_bench(const Netlist& netlist) {
  std::ostringstream out;
  out << "# " << netlist.name() << "\n";
  for (NetId id : netlist.primary_inputs()) out << "INPUT(" << netlist.net(id).name << ")\n";
  for (NetId id : netlist.primary_outputs()) out << "OUTPUT(" << netlist.net(id).name << ")\n";
  for (GateId g = 0; g < netlist.gate_count(); ++g) {
    const Gate& gate = netlist.gate(g);
    out << netlist.net(gate.output).name << " = " << to_string(gate.kind) << "(";
    for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
      if (i) out << ", ";
      out << netlist.net(gate.inputs[i]).name;
    }
    out << ")\n";
  }
  return out.str();
}

void write_bench_file(const Netlist& netlist, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << write_bench(netlist);
}

}  // namespace netfuzz
