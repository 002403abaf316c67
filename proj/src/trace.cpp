#include "pricesched/trace.hpp"

#include <fstream>
#include <sstream>

namespace pricesched {

Rational Trace::makespan() const {
  if (steps.empty()) return Rational(0);
  Rational mk(0);
  for (const Rational& l : steps.back().loads_after) mk = max(mk, l);
  return mk;
}

int Trace::phase_events() const {
  int count = 0;
  for (const StepRecord& s : steps) count += s.new_phase ? 1 : 0;
  return count;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(';');
    out += values[i].str();
  }
  return out;
}

std::vector<Rational> split_rationals(const std::string& cell) {
  std::vector<Rational> out;
  std::string item;
  std::stringstream ss(cell);
  while (std::getline(ss, item, ';')) out.push_back(Rational::parse(item));
  return out;
}

void write_trace_csv(const Trace& trace, std::ostream& os) {
  os << "step,job,model,prices,costs,chosen,new_phase,lambda,loads_after,virtual_after\n";
  for (const StepRecord& s : trace.steps) {
    os << s.step << ',' << s.job << ',' << to_string(trace.model) << ',';
    if (s.prices) os << join_rationals(*s.prices);
    os << ',';
    if (s.costs) os << join_rationals(*s.costs);
    os << ',' << (s.chosen + 1) << ',' << (s.new_phase ? 1 : 0) << ',';
    if (s.lambda) os << s.lambda->str();
    os << ',' << join_rationals(s.loads_after) << ',';
    if (s.virtual_after) os << join_rationals(*s.virtual_after);
    os << '\n';
  }
}

void write_trace_csv(const Trace& trace, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open trace file for writing: " + path);
  write_trace_csv(trace, os);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

int parse_int_cell(const std::string& cell, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(cell, &used);
    if (used != cell.size()) throw ParseError("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " cell: '" + cell + "'");
  }
}

}  // namespace

Trace read_trace_csv(std::istream& is) {
  Trace trace;
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty trace file");
  bool first_step = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 10) throw ParseError("trace row needs 10 cells, got line: " + line);
    StepRecord s;
    s.step = parse_int_cell(cells[0], "step");
    s.job = parse_int_cell(cells[1], "job");
    ModelKind kind = model_kind_from_string(cells[2]);
    if (first_step) {
      trace.model = kind;
    } else if (kind != trace.model) {
      throw ParseError("trace mixes machine models");
    }
    if (!cells[3].empty()) s.prices = split_rationals(cells[3]);
    if (!cells[4].empty()) s.costs = split_rationals(cells[4]);
    s.chosen = parse_int_cell(cells[5], "chosen") - 1;
    s.new_phase = cells[6] == "1";
    if (!cells[7].empty()) s.lambda = Rational::parse(cells[7]);
    s.loads_after = split_rationals(cells[8]);
    if (!cells[9].empty()) s.virtual_after = split_rationals(cells[9]);
    if (first_step) {
      trace.m = static_cast<int>(s.loads_after.size());
      first_step = false;
    }
    trace.steps.push_back(std::move(s));
  }
  return trace;
}

Trace read_trace_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open trace file: " + path);
  return read_trace_csv(is);
}

void write_prices_csv(const Trace& trace, std::ostream& os) {
  os << "step";
  for (int i = 1; i <= trace.m; ++i) os << ",price_" << i;
  os << '\n';
  for (const StepRecord& s : trace.steps) {
    if (!s.prices) continue;
    os << s.step;
    for (const Rational& p : *s.prices) os << ',' << p.str();
    os << '\n';
  }
}

}  // namespace pricesched
