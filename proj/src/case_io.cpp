#include "acuc/case_io.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace acuc {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Matrix {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;  // source line of each row
};

struct CaseText {
  std::vector<std::string> lines;

  static std::string strip_comment(const std::string& line) {
    auto pos = line.find('%');
    return pos == std::string::npos ? line : line.substr(0, pos);
  }
};

bool find_assignment(const CaseText& text, const std::string& field, std::size_t& line_out,
                     std::string& tail_out) {
  const std::string needle = "." + field;
  for (std::size_t i = 0; i < text.lines.size(); ++i) {
    const std::string line = CaseText::strip_comment(text.lines[i]);
    auto pos = line.find(needle);
    if (pos == std::string::npos) continue;
    auto eq = line.find('=', pos + needle.size());
    if (eq == std::string::npos) continue;
    // require the char after the field name to be non-identifier
    auto after = pos + needle.size();
    if (after < line.size() && (std::isalnum(line[after]) || line[after] == '_')) continue;
    line_out = i;
    tail_out = line.substr(eq + 1);
    return true;
  }
  return false;
}

double parse_scalar(const CaseText& text, const std::string& field) {
  std::size_t line;
  std::string tail;
  if (!find_assignment(text, field, line, tail))
    throw ParseError(1, "missing field " + field);
  char* end = nullptr;
  const double value = std::strtod(tail.c_str(), &end);
  if (end == tail.c_str()) throw ParseError(line + 1, "cannot read number for " + field);
  return value;
}

Matrix parse_matrix(const CaseText& text, const std::string& field) {
  std::size_t line;
  std::string tail;
  if (!find_assignment(text, field, line, tail))
    throw ParseError(1, "missing table " + field);
  auto bracket = tail.find('[');
  if (bracket == std::string::npos) throw ParseError(line + 1, field + ": expected [");

  Matrix mat;
  std::vector<double> row;
  std::string chunk = tail.substr(bracket + 1);
  std::size_t line_no = line;
  bool done = false;
  while (true) {
    const char* p = chunk.c_str();
    while (*p != '\0') {
      while (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r') ++p;
      if (*p == '\0') break;
      if (*p == ';') {
        if (!row.empty()) {
          mat.rows.push_back(row);
          mat.row_lines.push_back(line_no + 1);
          row.clear();
        }
        ++p;
        continue;
      }
      if (*p == ']') {
        if (!row.empty()) {
          mat.rows.push_back(row);
          mat.row_lines.push_back(line_no + 1);
          row.clear();
        }
        done = true;
        break;
      }
      char* end = nullptr;
      const double value = std::strtod(p, &end);
      if (end == p) throw ParseError(line_no + 1, field + ": unexpected token");
      row.push_back(value);
      p = end;
    }
    if (done) break;
    ++line_no;
    if (line_no >= text.lines.size())
      throw ParseError(line + 1, field + ": unterminated table");
    chunk = CaseText::strip_comment(text.lines[line_no]);
  }
  if (mat.rows.empty()) throw ParseError(line + 1, field + ": empty table");
  return mat;
}

double deg2rad(double deg) { return deg * kPi / 180.0; }

}  // namespace

Network parse_case(const std::string& text) {
  CaseText source;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) source.lines.push_back(line);

  Network net;
  net.base_mva = parse_scalar(source, "baseMVA");
  if (!(net.base_mva > 0.0)) throw ParseError(1, "baseMVA must be positive");
  const double base = net.base_mva;

  const Matrix bus = parse_matrix(source, "bus");
  for (std::size_t r = 0; r < bus.rows.size(); ++r) {
    const auto& row = bus.rows[r];
    if (row.size() < 13) throw ParseError(bus.row_lines[r], "bus row needs 13 columns");
    BusRecord rec;
    rec.id = static_cast<int>(row[0]);
    const int type = static_cast<int>(row[1]);
    switch (type) {
      case 1: rec.type = BusType::PQ; break;
      case 2: rec.type = BusType::PV; break;
      case 3: rec.type = BusType::Ref; break;
      default:
        throw ParseError(bus.row_lines[r], "unsupported bus type " + std::to_string(type));
    }
    rec.pd = row[2] / base;
    rec.qd = row[3] / base;
    rec.gs_shunt = row[4] / base;
    rec.bs_shunt = row[5] / base;
    rec.vmax = row[11];
    rec.vmin = row[12];
    net.buses.push_back(rec);
  }

  const Matrix gen = parse_matrix(source, "gen");
  std::vector<std::size_t> active_gen_rows;
  for (std::size_t r = 0; r < gen.rows.size(); ++r) {
    const auto& row = gen.rows[r];
    if (row.size() < 10) throw ParseError(gen.row_lines[r], "gen row needs 10 columns");
    if (row[7] <= 0.0) continue;  // out of service
    GeneratorRecord rec;
    rec.bus = static_cast<int>(row[0]);
    rec.qmax = row[3] / base;
    rec.qmin = row[4] / base;
    rec.pmax = row[8] / base;
    rec.pmin = row[9] / base;
    net.generators.push_back(rec);
    active_gen_rows.push_back(r);
  }

  const Matrix branch = parse_matrix(source, "branch");
  double cap_sum = 1.0;
  for (const auto& g : net.generators) cap_sum += g.pmax + std::abs(g.qmax);
  for (std::size_t r = 0; r < branch.rows.size(); ++r) {
    const auto& row = branch.rows[r];
    if (row.size() < 11) throw ParseError(branch.row_lines[r], "branch row needs 11 columns");
    if (row[10] <= 0.0) continue;  // out of service
    BranchRecord rec;
    rec.from = static_cast<int>(row[0]);
    rec.to = static_cast<int>(row[1]);
    rec.r = row[2];
    rec.x = row[3];
    rec.b_charge = row[4];
    rec.s_max = row[5] > 0.0 ? row[5] / base : cap_sum;
    rec.tap = row[8] > 0.0 ? row[8] : 1.0;
    rec.shift = deg2rad(row[9]);
    if (row.size() >= 13 && !(row[11] == 0.0 && row[12] == 0.0)) {
      rec.angle_min = deg2rad(row[11]);
      rec.angle_max = deg2rad(row[12]);
    } else {
      rec.angle_min = -2.0 * kPi;
      rec.angle_max = 2.0 * kPi;
    }
    if (rec.x == 0.0)
      throw ValidationError("branch " + std::to_string(rec.from) + "-" +
                            std::to_string(rec.to) + " has zero reactance");
    rec.y = branch_admittance(rec.r, rec.x, rec.b_charge, rec.tap, rec.shift);
    net.branches.push_back(rec);
  }

  const Matrix cost = parse_matrix(source, "gencost");
  if (cost.rows.size() < gen.rows.size())
    throw ParseError(cost.row_lines[0], "gencost has fewer rows than gen");
  for (std::size_t k = 0; k < active_gen_rows.size(); ++k) {
    const auto& row = cost.rows[active_gen_rows[k]];
    if (row.size() < 5) throw ParseError(cost.row_lines[active_gen_rows[k]],
                                         "gencost row needs model/startup/shutdown/n/coeffs");
    const int model = static_cast<int>(row[0]);
    if (model != 2)
      throw ParseError(cost.row_lines[active_gen_rows[k]],
                       "only polynomial cost model supported");
    const int ncost = static_cast<int>(row[3]);
    if (static_cast<int>(row.size()) < 4 + ncost)
      throw ParseError(cost.row_lines[active_gen_rows[k]], "gencost row truncated");
    GeneratorRecord& rec = net.generators[k];
    // coefficients highest order first, in $/MW^k; convert to $/p.u.^k
    std::vector<double> coeff(row.begin() + 4, row.begin() + 4 + ncost);
    if (ncost >= 3) {
      rec.cost_quadratic = coeff[ncost - 3] * base * base;
      rec.cost_linear = coeff[ncost - 2] * base;
      rec.cost_constant = coeff[ncost - 1];
    } else if (ncost == 2) {
      rec.cost_linear = coeff[0] * base;
      rec.cost_constant = coeff[1];
    } else if (ncost == 1) {
      rec.cost_constant = coeff[0];
    }
  }

  net.finalize();
  return net;
}

namespace {

nlohmann::json bus_to_json(const BusRecord& b) {
  const char* type = b.type == BusType::Ref ? "ref" : (b.type == BusType::PV ? "PV" : "PQ");
  return {{"id", b.id},       {"type", type},        {"pd", b.pd},
          {"qd", b.qd},       {"gs", b.gs_shunt},    {"bs", b.bs_shunt},
          {"vmin", b.vmin},   {"vmax", b.vmax}};
}

BusRecord bus_from_json(const nlohmann::json& j) {
  BusRecord b;
  b.id = j.at("id").get<int>();
  const std::string type = j.at("type").get<std::string>();
  b.type = type == "ref" ? BusType::Ref : (type == "PV" ? BusType::PV : BusType::PQ);
  b.pd = j.at("pd").get<double>();
  b.qd = j.at("qd").get<double>();
  b.gs_shunt = j.at("gs").get<double>();
  b.bs_shunt = j.at("bs").get<double>();
  b.vmin = j.at("vmin").get<double>();
  b.vmax = j.at("vmax").get<double>();
  return b;
}

}  // namespace

std::string serialize_network(const Network& net) {
  nlohmann::json j;
  j["name"] = net.name;
  j["base_mva"] = net.base_mva;
  for (const auto& b : net.buses) j["buses"].push_back(bus_to_json(b));
  for (const auto& br : net.branches) {
    j["branches"].push_back({{"from", br.from},
                             {"to", br.to},
                             {"r", br.r},
                             {"x", br.x},
                             {"b", br.b_charge},
                             {"tap", br.tap},
                             {"shift", br.shift},
                             {"s_max", br.s_max},
                             {"angle_min", br.angle_min},
                             {"angle_max", br.angle_max}});
  }
  for (const auto& g : net.generators) {
    j["generators"].push_back({{"bus", g.bus},
                               {"pmin", g.pmin},
                               {"pmax", g.pmax},
                               {"qmin", g.qmin},
                               {"qmax", g.qmax},
                               {"cost_quadratic", g.cost_quadratic},
                               {"cost_linear", g.cost_linear},
                               {"cost_constant", g.cost_constant}});
  }
  return j.dump(2);
}

Network parse_network_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Network net;
  net.name = j.value("name", "");
  net.base_mva = j.at("base_mva").get<double>();
  for (const auto& jb : j.at("buses")) net.buses.push_back(bus_from_json(jb));
  for (const auto& jb : j.at("branches")) {
    BranchRecord br;
    br.from = jb.at("from").get<int>();
    br.to = jb.at("to").get<int>();
    br.r = jb.at("r").get<double>();
    br.x = jb.at("x").get<double>();
    br.b_charge = jb.at("b").get<double>();
    br.tap = jb.at("tap").get<double>();
    br.shift = jb.at("shift").get<double>();
    br.s_max = jb.at("s_max").get<double>();
    br.angle_min = jb.at("angle_min").get<double>();
    br.angle_max = jb.at("angle_max").get<double>();
    br.y = branch_admittance(br.r, br.x, br.b_charge, br.tap, br.shift);
    net.branches.push_back(br);
  }
  for (const auto& jg : j.at("generators")) {
    GeneratorRecord g;
    g.bus = jg.at("bus").get<int>();
    g.pmin = jg.at("pmin").get<double>();
    g.pmax = jg.at("pmax").get<double>();
    g.qmin = jg.at("qmin").get<double>();
    g.qmax = jg.at("qmax").get<double>();
    g.cost_quadratic = jg.at("cost_quadratic").get<double>();
    g.cost_linear = jg.at("cost_linear").get<double>();
    g.cost_constant = jg.at("cost_constant").get<double>();
    net.generators.push_back(g);
  }
  net.finalize();
  return net;
}

}  // namespace acuc
