#include "qsd/config.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qsd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double parse_real(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a real number, got '" + tok + "'");
  }
}

// "re,im" or plain "re"
cplx parse_complex(const std::string& tok, int line) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos) return cplx(parse_real(tok, line), 0.0);
  return cplx(parse_real(tok.substr(0, comma), line),
              parse_real(tok.substr(comma + 1), line));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<cplx> parse_complex_row(const std::string& val, int n, int line) {
  const auto toks = split_ws(val);
  if (static_cast<int>(toks.size()) != n)
    throw ParseError(line, "expected " + std::to_string(n) + " entries, got " +
                               std::to_string(toks.size()));
  std::vector<cplx> row;
  for (const auto& t : toks) row.push_back(parse_complex(t, line));
  return row;
}

BlochVector parse_bloch(const std::string& val, int line) {
  auto toks = split_ws(val);
  if (toks.size() == 1) {
    // allow comma-separated triple
    toks.clear();
    std::istringstream is(val);
    std::string t;
    while (std::getline(is, t, ',')) toks.push_back(trim(t));
  }
  if (toks.size() != 3) throw ParseError(line, "expected three components");
  return BlochVector{parse_real(toks[0], line), parse_real(toks[1], line),
                     parse_real(toks[2], line)};
}

struct MatrixRows {
  std::array<bool, 4> seen{};
  Mat m;
};

}  // namespace

ModelConfig parse_config(const std::string& text) {
  ModelConfig cfg;
  std::istringstream in(text);
  std::string rawline;
  std::string section;
  int lineno = 0;

  MatrixRows rows_a{{}, Mat::Zero(3, 3)}, rows_b{{}, Mat::Zero(3, 3)};
  MatrixRows rows_raw{{}, Mat::Zero(4, 4)};
  SweepSpec sweep;
  bool have_sweep = false;

  while (std::getline(in, rawline)) {
    ++lineno;
    std::string l = rawline;
    const auto hash = l.find('#');
    if (hash != std::string::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError(lineno, "unterminated section header");
      section = lower(trim(l.substr(1, l.size() - 2)));
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
    const std::string key = lower(trim(l.substr(0, eq)));
    const std::string val = trim(l.substr(eq + 1));
    if (key.empty() || val.empty()) throw ParseError(lineno, "empty key or value");

    if (section == "model") {
      if (key == "preset") cfg.preset = lower(val);
      else if (key == "a") cfg.a = parse_real(val, lineno);
      else if (key == "b") cfg.b = parse_real(val, lineno);
      else if (key == "alpha") cfg.alpha = parse_real(val, lineno);
      else if (key.size() == 2 && (key[0] == 'a' || key[0] == 'b') && key[1] >= '1' &&
               key[1] <= '3') {
        auto& rows = key[0] == 'a' ? rows_a : rows_b;
        const int r = key[1] - '1';
        const auto row = parse_complex_row(val, 3, lineno);
        for (int j = 0; j < 3; ++j) rows.m(r, j) = row[j];
        rows.seen[r] = true;
      } else {
        throw ParseError(lineno, "unknown model key '" + key + "'");
      }
    } else if (section == "initial") {
      if (key == "type") cfg.initial_type = lower(val);
      else if (key == "bloch_t") cfg.bloch_t = parse_bloch(val, lineno);
      else if (key == "bloch_a") cfg.bloch_a = parse_bloch(val, lineno);
      else if (key == "p") cfg.p = parse_real(val, lineno);
      else if (key.size() == 4 && key.rfind("raw", 0) == 0 && key[3] >= '1' && key[3] <= '4') {
        const int r = key[3] - '1';
        const auto row = parse_complex_row(val, 4, lineno);
        for (int j = 0; j < 4; ++j) rows_raw.m(r, j) = row[j];
        rows_raw.seen[r] = true;
      } else {
        throw ParseError(lineno, "unknown initial key '" + key + "'");
      }
    } else if (section == "evolution") {
      if (key == "t_max") cfg.t_max = parse_real(val, lineno);
      else if (key == "dt") cfg.dt = parse_real(val, lineno);
      else if (key == "samples") cfg.samples = static_cast<int>(parse_real(val, lineno));
      else throw ParseError(lineno, "unknown evolution key '" + key + "'");
    } else if (section == "sweep") {
      have_sweep = true;
      if (key == "parameter") sweep.parameter = val == "P" ? val : lower(val);
      else if (key == "from") sweep.from = parse_real(val, lineno);
      else if (key == "to") sweep.to = parse_real(val, lineno);
      else if (key == "steps") sweep.steps = static_cast<int>(parse_real(val, lineno));
      else throw ParseError(lineno, "unknown sweep key '" + key + "'");
    } else if (section == "tolerances") {
      if (key == "zero_eig") cfg.tols.zero_eig_rel = parse_real(val, lineno);
      else if (key == "psd_slack") cfg.tols.psd_slack = parse_real(val, lineno);
      else if (key == "span_defect") cfg.tols.span_defect = parse_real(val, lineno);
      else if (key == "peripheral") cfg.tols.peripheral = parse_real(val, lineno);
      else throw ParseError(lineno, "unknown tolerance key '" + key + "'");
    } else if (section.empty()) {
      throw ParseError(lineno, "key outside of any section");
    } else {
      throw ParseError(lineno, "unknown section '" + section + "'");
    }
  }

  auto complete = [&](const MatrixRows& rows, const char* name) -> std::optional<Mat> {
    const int seen = static_cast<int>(rows.seen[0]) + rows.seen[1] + rows.seen[2] + rows.seen[3];
    const int need = name[0] == 'r' ? 4 : 3;
    const int have = name[0] == 'r' ? seen : seen - static_cast<int>(rows.seen[3]);
    if (have == 0) return std::nullopt;
    if (have != need)
      throw ParseError(0, std::string("incomplete matrix '") + name + "': " +
                              std::to_string(have) + " of " + std::to_string(need) + " rows");
    return rows.m;
  };
  cfg.block_a = complete(rows_a, "A");
  cfg.block_b = complete(rows_b, "B");
  cfg.raw_state = complete(rows_raw, "raw");
  if (have_sweep) {
    if (sweep.parameter.empty()) throw ParseError(0, "sweep section without parameter");
    if (sweep.steps < 1) throw ParseError(0, "sweep steps must be >= 1");
    cfg.sweep = sweep;
  }
  if (cfg.preset && cfg.block_a)
    throw ParseError(0, "give either a preset or explicit blocks, not both");
  if (!cfg.preset && !cfg.block_a)
    throw ParseError(0, "model section must give a preset or explicit blocks");
  if (cfg.block_a && !cfg.block_b) cfg.block_b = Mat::Zero(3, 3);
  return cfg;
}

ModelConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

Mat preset_eq30_block(double a, double b) {
  Mat m(3, 3);
  m << a, cplx(0, b), 0, cplx(0, -b), a, 0, 0, 0, a;
  return m;
}

KossakowskiModel make_model(const ModelConfig& cfg) {
  return make_model(cfg, cfg.a, cfg.b, cfg.alpha);
}

KossakowskiModel make_model(const ModelConfig& cfg, double a, double b, double alpha) {
  if (cfg.block_a) return assemble(*cfg.block_a, *cfg.block_b, cfg.tols);
  const std::string& p = *cfg.preset;
  if (p == "eq30") {
    const Mat blk = preset_eq30_block(a, b);
    return assemble(blk, blk, cfg.tols);
  }
  if (p == "case1") {
    Mat blk = Mat::Zero(3, 3);
    blk(2, 2) = a;
    return assemble(blk, blk, cfg.tols);
  }
  if (p == "case3") {
    Mat blk = Mat::Zero(3, 3);
    blk(2, 2) = a;
    return assemble(blk, alpha * blk, cfg.tols);
  }
  if (p == "trivial") {
    return assemble(a * Mat::Identity(3, 3), Mat::Zero(3, 3), cfg.tols);
  }
  throw std::runtime_error("unknown preset '" + p + "'");
}

InitialState make_initial(const ModelConfig& cfg) {
  if (cfg.initial_type == "product") return InitialState::product(cfg.bloch_t, cfg.bloch_a);
  if (cfg.initial_type == "entangled") return InitialState::entangled(cfg.p);
  if (cfg.initial_type == "raw") {
    if (!cfg.raw_state) throw std::runtime_error("raw initial state rows missing");
    return InitialState::raw(*cfg.raw_state);
  }
  throw std::runtime_error("unknown initial state type '" + cfg.initial_type + "'");
}

}  // namespace qsd
