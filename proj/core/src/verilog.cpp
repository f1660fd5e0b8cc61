#include "netfuzz/verilog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace netfuzz {

CellMap parse_cell_map(std::string_view text) {
  CellMap map;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream words(line);
    std::string cell, kind_text;
    if (!(words >> cell)) continue;
    if (!(words >> kind_text))
      throw ParseError("cellmap:" + std::to_string(lineno) + ": missing gate kind");
    const auto kind = gate_kind_from(kind_text);
    if (!kind)
      throw ParseError("cellmap:" + std::to_string(lineno) + ": unknown gate kind '" +
                       kind_text + "'");
    CellSpec spec;
    spec.kind = *kind;
    std::string pin;
    while (words >> pin) spec.pins.push_back(pin);
    if (spec.pins.empty())
      throw ParseError("cellmap:" + std::to_string(lineno) + ": cell '" + cell +
                       "' lists no pins");
    if (!arity_ok(*kind, spec.pins.size() - 1))
      throw ParseError("cellmap:" + std::to_string(lineno) + ": cell '" + cell + "' gives " +
                       std::to_string(spec.pins.size() - 1) + " input pin(s) for " +
                       to_string(*kind));
    map.cells.emplace(std::move(cell), std::move(spec));
  }
  return map;
}

CellMap load_cell_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open cell map '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cell_map(buf.str());
}

namespace {

struct Token {
  std::string text;
  int line;
  bool ident;
};

class Lexer {
public:
  Lexer(std::string_view text, std::string_view src) : text_(text), src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        pos_ += 2;
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ = std::min(pos_ + 2, text_.size());
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\\') {
        const std::size_t start = pos_;
        if (c == '\\') {  // escaped identifier, ends at whitespace
          ++pos_;
          while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
          tokens.push_back({std::string(text_.substr(start + 1, pos_ - start - 1)), line_, true});
        } else {
          while (pos_ < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                  text_[pos_] == '$' || text_[pos_] == '.' || text_[pos_] == '\''))
            ++pos_;
          tokens.push_back({std::string(text_.substr(start, pos_ - start)), line_, true});
        }
      } else {
        tokens.push_back({std::string(1, c), line_, false});
        ++pos_;
      }
    }
    return tokens;
  }

private:
  std::string_view text_;
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

struct Instance {
  std::string type;
  std::string name;
  std::vector<std::pair<std::string, std::string>> named;  // .pin(net)
  std::vector<std::string> positional;
  int line;
};

struct VerilogModule {
  std::string name;
  std::vector<std::string> ports;  // header order
  std::vector<std::string> inputs, outputs;
  std::vector<Instance> instances;
  int line;
};

class Parser {
public:
  Parser(std::vector<Token> tokens, std::string_view src)
      : tokens_(std::move(tokens)), src_(src) {}

  std::vector<VerilogModule> run() {
    std::vector<VerilogModule> modules;
    while (!done()) {
      expect_keyword("module");
      modules.push_back(parse_module());
    }
    return modules;
  }

private:
  [[noreturn]] void fail(const std::string& what, int line) const {
    throw ParseError(std::string(src_) + ":" + std::to_string(line) + ": " + what);
  }

  bool done() const { return at_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw ParseError(std::string(src_) + ": unexpected end of input");
    return tokens_[at_];
  }

  Token next() {
    Token t = peek();
    ++at_;
    return t;
  }

  bool accept(std::string_view text) {
    if (!done() && peek().text == text) {
      ++at_;
      return true;
    }
    return false;
  }

  void expect(std::string_view text) {
    const Token t = next();
    if (t.text != text) fail("expected '" + std::string(text) + "', got '" + t.text + "'", t.line);
  }

  void expect_keyword(std::string_view kw) { expect(kw); }

  std::string expect_ident() {
    const Token t = next();
    if (!t.ident) fail("expected identifier, got '" + t.text + "'", t.line);
    return t.text;
  }

  void reject_behavioral(const Token& t) const {
    static const char* banned[] = {"always", "assign", "initial", "reg",  "if",
                                   "case",   "begin", "function", "task", "generate"};
    for (const char* b : banned)
      if (t.text == b) fail("behavioral construct '" + t.text + "' is not supported", t.line);
  }

  void reject_range(const Token& t) const {
    if (t.text == "[") fail("bus/range declarations are not supported (scalar nets only)", t.line);
  }

  // input a, b; — also used for output/wire.
  void parse_decl_names(std::vector<std::string>* into) {
    while (true) {
      const Token t = peek();
      reject_range(t);
      const std::string name = expect_ident();
      if (into) into->push_back(name);
      if (accept(",")) continue;
      expect(";");
      break;
    }
  }

  VerilogModule parse_module() {
    VerilogModule m;
    m.line = peek().line;
    m.name = expect_ident();
    if (accept("(")) {
      if (!accept(")")) {
        while (true) {
          Token t = peek();
          reject_range(t);
          if (t.text == "input" || t.text == "output") {  // ANSI header
            next();
            reject_range(peek());
            const std::string name = expect_ident();
            m.ports.push_back(name);
            (t.text == "input" ? m.inputs : m.outputs).push_back(name);
          } else {
            m.ports.push_back(expect_ident());
          }
          if (accept(",")) continue;
          expect(")");
          break;
        }
      }
    }
    expect(";");

    while (true) {
      const Token t = peek();
      if (t.text == "endmodule") {
        next();
        break;
      }
      reject_behavioral(t);
      if (t.text == "input") {
        next();
        parse_decl_names(&m.inputs);
      } else if (t.text == "output") {
        next();
        parse_decl_names(&m.outputs);
      } else if (t.text == "wire") {
        next();
        parse_decl_names(nullptr);  // wires spring into existence on use
      } else if (t.ident) {
        m.instances.push_back(parse_instance());
      } else {
        fail("unexpected '" + t.text + "'", t.line);
      }
    }

    // Non-ANSI headers list bare names; keep header order for PI layout.
    if (m.ports.empty()) {
      m.ports.insert(m.ports.end(), m.inputs.begin(), m.inputs.end());
      m.ports.insert(m.ports.end(), m.outputs.begin(), m.outputs.end());
    }
    return m;
  }

  Instance parse_instance() {
    Instance inst;
    inst.line = peek().line;
    inst.type = expect_ident();
    inst.name = expect_ident();
    expect("(");
    if (!accept(")")) {
      while (true) {
        if (accept(".")) {
          const std::string pin = expect_ident();
          expect("(");
          inst.named.emplace_back(pin, accept(")") ? std::string() : expect_ident());
          if (!inst.named.back().second.empty()) expect(")");
        } else {
          reject_range(peek());
          inst.positional.push_back(expect_ident());
        }
        if (accept(",")) continue;
        expect(")");
        break;
      }
    }
    expect(";");
    if (!inst.named.empty() && !inst.positional.empty())
      fail("mixed named and positional connections on instance '" + inst.name + "'", inst.line);
    return inst;
  }

  std::vector<Token> tokens_;
  std::string_view src_;
  std::size_t at_ = 0;
};

class Elaborator {
public:
  Elaborator(const std::vector<VerilogModule>& modules, const CellMap& cells,
             std::string_view src)
      : cells_(cells), src_(src) {
    for (const auto& m : modules) {
      if (by_name_.count(m.name))
        throw ParseError(std::string(src) + ": duplicate module '" + m.name + "'");
      by_name_.emplace(m.name, &m);
    }
  }

  Netlist run() {
    const VerilogModule& top = find_top();
    NetlistBuilder builder(top.name);
    // Top ports become the design's PIs/POs in header order.
    std::unordered_map<std::string, std::string> bindings;
    for (const std::string& p : top.ports) bindings.emplace(p, p);
    for (const std::string& p : top.ports) {
      const bool is_in = contains(top.inputs, p);
      const bool is_out = contains(top.outputs, p);
      if (!is_in && !is_out)
        throw ParseError(std::string(src_) + ": port '" + p + "' of module '" + top.name +
                         "' has no direction");
      const NetId id = builder.add_net(p, top.line);
      if (is_in) builder.mark_input(id, top.line);
      if (is_out) builder.mark_output(id);
    }
    instantiate(top, "", bindings, builder);
    try {
      return builder.finish();
    } catch (const ParseError& e) {
      throw ParseError(std::string(src_) + ": " + e.what());
    }
  }

private:
  static bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  const VerilogModule& find_top() const {
    std::unordered_map<std::string, bool> instantiated;
    for (const auto& [name, mod] : by_name_)
      for (const Instance& inst : mod->instances)
        if (by_name_.count(inst.type)) instantiated[inst.type] = true;
    const VerilogModule* top = nullptr;
    for (const auto& [name, mod] : by_name_) {
      if (instantiated.count(name)) continue;
      if (top)
        throw ParseError(std::string(src_) + ": multiple top candidates: '" + top->name +
                         "' and '" + name + "'");
      top = mod;
    }
    if (!top) throw ParseError(std::string(src_) + ": no top module (instantiation cycle?)");
    return *top;
  }

  // Maps an identifier inside `m` to a global net name.
  static std::string resolve(const std::string& name, const std::string& prefix,
                             const std::unordered_map<std::string, std::string>& bindings) {
    const auto it = bindings.find(name);
    if (it != bindings.end()) return it->second;
    return prefix + name;
  }

  void instantiate(const VerilogModule& m, const std::string& prefix,
                   const std::unordered_map<std::string, std::string>& bindings,
                   NetlistBuilder& builder) {
    for (const Instance& inst : m.instances) {
      // pin -> global net
      std::unordered_map<std::string, std::string> conn;
      const auto pin_names = [&](const std::vector<std::string>& pins) {
        if (!inst.positional.empty()) {
          if (inst.positional.size() != pins.size())
            throw ParseError(std::string(src_) + ":" + std::to_string(inst.line) +
                             ": instance '" + inst.name + "' connects " +
                             std::to_string(inst.positional.size()) + " nets to " +
                             std::to_string(pins.size()) + " pins");
          for (std::size_t i = 0; i < pins.size(); ++i)
            conn.emplace(pins[i], resolve(inst.positional[i], prefix, bindings));
        } else {
          for (const auto& [pin, net] : inst.named) {
            if (net.empty()) continue;  // explicitly unconnected
            conn.emplace(pin, resolve(net, prefix, bindings));
          }
        }
      };

      if (cells_.has(inst.type)) {
        const CellSpec& spec = cells_.at(inst.type);
        pin_names(spec.pins);
        std::vector<NetId> inputs;
        for (std::size_t i = 0; i + 1 < spec.pins.size(); ++i) {
          const auto it = conn.find(spec.pins[i]);
          if (it == conn.end())
            throw ParseError(std::string(src_) + ":" + std::to_string(inst.line) +
                             ": instance '" + inst.name + "' leaves input pin '" +
                             spec.pins[i] + "' unconnected");
          inputs.push_back(builder.add_net(it->second, inst.line));
        }
        const auto out = conn.find(spec.pins.back());
        if (out == conn.end())
          throw ParseError(std::string(src_) + ":" + std::to_string(inst.line) +
                           ": instance '" + inst.name + "' leaves output pin '" +
                           spec.pins.back() + "' unconnected");
        builder.add_gate(spec.kind, builder.add_net(out->second, inst.line),
                         std::move(inputs), inst.line);
        continue;
      }

      const auto sub = by_name_.find(inst.type);
      if (sub == by_name_.end())
        throw ParseError(std::string(src_) + ":" + std::to_string(inst.line) +
                         ": unmapped cell '" + inst.type + "' (not in cell map, not a module)");
      pin_names(sub->second->ports);
      const std::string child_prefix = prefix + inst.name + ".";
      std::unordered_map<std::string, std::string> child_bindings;
      for (const std::string& port : sub->second->ports) {
        const auto it = conn.find(port);
        child_bindings.emplace(port,
                               it != conn.end() ? it->second : child_prefix + port);
      }
      instantiate(*sub->second, child_prefix, child_bindings, builder);
    }
  }

  const CellMap& cells_;
  std::string_view src_;
  std::unordered_map<std::string, const VerilogModule*> by_name_;
};

}  // namespace

Netlist parse_structural_verilog(std::string_view text, const CellMap& cell_map,
                                 std::string_view source_name) {
  Lexer lexer(text, source_name);
  Parser parser(lexer.run(), source_name);
  const std::vector<VerilogModule> modules = parser.run();
  if (modules.empty()) throw ParseError(std::string(source_name) + ": no module found");
  Elaborator elab(modules, cell_map, source_name);
  return elab.run();
}

Netlist parse_structural_verilog_file(const std::string& path, const CellMap& cell_map) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open netlist file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = path;
  if (const std::size_t slash = base.find_last_of('/'); slash != std::string::npos)
    base = base.substr(slash + 1);
  return parse_structural_verilog(buf.str(), cell_map, base);
}

}  // namespace netfuzz
