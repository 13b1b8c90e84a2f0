#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "mdd/circuit.hpp"
#include "mdd/errors.hpp"

namespace mdd {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::size_t line_no) : line_no_(line_no) {}

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_no_, column, message);
  }

  std::size_t natural(std::string_view text, std::size_t column, std::string_view what) const {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
      fail(column, "expected a non-negative integer for " + std::string(what) + ", got '" + std::string(text) + "'");
    }
    return value;
  }

  double real(std::string_view text, std::size_t column, std::string_view what) const {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      fail(column, "expected a decimal number for " + std::string(what) + ", got '" + std::string(text) + "'");
    }
    return value;
  }

 private:
  std::size_t line_no_;
};

bool parse_kind(std::string_view name, GateKind& kind) {
  for (const auto k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::Givens, GateKind::Cex, GateKind::Csum}) {
    if (gate_name(k) == name) {
      kind = k;
      return true;
    }
  }
  return false;
}

QuditRegister parse_header(const std::vector<Token>& tokens, const LineParser& p) {
  if (tokens[0].text != "qudits") p.fail(tokens[0].column, "expected 'qudits' header, got '" + std::string(tokens[0].text) + "'");
  if (tokens.size() < 2) p.fail(tokens[0].column, "'qudits' needs at least one dimension");
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto d = p.natural(tokens[i].text, tokens[i].column, "dimension");
    if (d < 2) p.fail(tokens[i].column, "dimension " + std::to_string(d) + " is below 2");
    dims.push_back(d);
  }
  return QuditRegister(std::move(dims));
}

Operation parse_gate(const std::vector<Token>& tokens, const QuditRegister& reg, const LineParser& p) {
  if (tokens.size() < 2) p.fail(tokens[0].column, "'gate' needs a gate name");
  Operation op;
  if (!parse_kind(tokens[1].text, op.kind)) {
    p.fail(tokens[1].column, "unknown gate name '" + std::string(tokens[1].text) + "'");
  }

  const auto line_index = [&](std::string_view text, std::size_t column, std::string_view what) {
    const auto v = p.natural(text, column, what);
    if (v >= reg.size()) {
      p.fail(column, std::string(what) + " " + std::to_string(v) + " outside register of " +
                         std::to_string(reg.size()) + " qudits");
    }
    return v;
  };

  bool has_target = false;
  bool has_theta = false;
  bool has_phi = false;
  std::vector<std::size_t> ctrl_columns;
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    const auto eq = tok.text.find('=');
    if (eq == std::string_view::npos) p.fail(tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
    const auto key = tok.text.substr(0, eq);
    const auto value = tok.text.substr(eq + 1);
    const auto vcol = tok.column + eq + 1;
    const auto duplicate = [&](bool seen) {
      if (seen) p.fail(tok.column, "duplicate argument '" + std::string(key) + "'");
    };

    if (key == "target") {
      duplicate(has_target);
      op.target = line_index(value, vcol, "target");
      has_target = true;
    } else if (key == "ctrl") {
      const auto at = value.find('@');
      if (at == std::string_view::npos) p.fail(vcol, "ctrl expects L@V, got '" + std::string(value) + "'");
      const auto line = line_index(value.substr(0, at), vcol, "control line");
      const auto level = p.natural(value.substr(at + 1), vcol + at + 1, "control level");
      if (level >= reg.dim(line)) {
        p.fail(vcol + at + 1, "control level " + std::to_string(level) + " out of range for line " +
                                  std::to_string(line) + " of dimension " + std::to_string(reg.dim(line)));
      }
      op.controls.push_back(Control{line, level});
      ctrl_columns.push_back(tok.column);
    } else if (key == "levels") {
      duplicate(op.levels.has_value());
      const auto comma = value.find(',');
      if (comma == std::string_view::npos) p.fail(vcol, "levels expects i,j, got '" + std::string(value) + "'");
      const auto i = p.natural(value.substr(0, comma), vcol, "level");
      const auto j = p.natural(value.substr(comma + 1), vcol + comma + 1, "level");
      op.levels = std::pair{i, j};
    } else if (key == "theta") {
      duplicate(has_theta);
      op.theta = p.real(value, vcol, "theta");
      has_theta = true;
    } else if (key == "phi") {
      duplicate(has_phi);
      op.phi = p.real(value, vcol, "phi");
      has_phi = true;
    } else if (key == "ctrl2") {
      duplicate(op.csum_control.has_value());
      op.csum_control = line_index(value, vcol, "ctrl2 line");
    } else {
      p.fail(tok.column, "unknown argument '" + std::string(key) + "'");
    }
  }

  const auto name_col = tokens[1].column;
  if (!has_target) p.fail(name_col, "gate '" + std::string(tokens[1].text) + "' needs target=T");
  const bool angled = op.kind == GateKind::Givens;
  const bool leveled = op.kind == GateKind::Givens || op.kind == GateKind::Cex;
  if (leveled && !op.levels) p.fail(name_col, "gate '" + std::string(tokens[1].text) + "' needs levels=i,j");
  if (!leveled && op.levels) p.fail(name_col, "gate '" + std::string(tokens[1].text) + "' does not take levels");
  if (angled && !has_theta) p.fail(name_col, "givens needs theta=R");
  if (!angled && (has_theta || has_phi)) p.fail(name_col, "only givens takes theta/phi");
  if (op.kind == GateKind::Csum) {
    if (!op.csum_control) p.fail(name_col, "csum needs ctrl2=L");
    if (!op.controls.empty()) p.fail(ctrl_columns.front(), "csum does not take ctrl=L@V");
  } else if (op.csum_control) {
    p.fail(name_col, "only csum takes ctrl2");
  }
  if (op.kind == GateKind::Cex && op.controls.size() != 1) p.fail(name_col, "cex needs exactly one ctrl=L@V");
  for (std::size_t i = 0; i < op.controls.size(); ++i) {
    if (op.controls[i].line == op.target) p.fail(ctrl_columns[i], "control on target line");
  }

  try {
    (void)lower(reg, op);
  } catch (const InputError& e) {
    p.fail(name_col, e.what());
  }
  return op;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<QuditRegister> reg;
  std::vector<Operation> ops;
  bool measure_all = false;
  std::size_t measure_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const LineParser p(line_no);

    if (!reg) {
      reg = parse_header(tokens, p);
      continue;
    }
    if (measure_all) p.fail(tokens[0].column, "nothing may follow 'measure all' (line " + std::to_string(measure_line) + ")");
    if (tokens[0].text == "gate") {
      ops.push_back(parse_gate(tokens, *reg, p));
    } else if (tokens[0].text == "measure") {
      if (tokens.size() != 2 || tokens[1].text != "all") {
        p.fail(tokens[0].column, "expected 'measure all'");
      }
      measure_all = true;
      measure_line = line_no;
    } else if (tokens[0].text == "qudits") {
      p.fail(tokens[0].column, "duplicate 'qudits' header");
    } else {
      p.fail(tokens[0].column, "unknown statement '" + std::string(tokens[0].text) + "'");
    }
  }
  if (!reg) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'qudits' header");
  return Circuit{std::move(*reg), std::move(ops), measure_all};
}

}  // namespace mdd
