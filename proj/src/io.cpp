#include "unavail/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace unavail {

namespace {

struct Fields {
  std::map<std::string, std::vector<std::string>> values;
  std::vector<std::pair<std::string, std::vector<std::string>>> ordered;
};

Fields tokenize(const std::string& text) {
  Fields f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> rest;
    for (std::string tok; ls >> tok;) rest.push_back(tok);
    f.ordered.emplace_back(key, rest);
    f.values[key] = rest;
  }
  return f;
}

const std::string& single(const Fields& f, const std::string& key) {
  auto it = f.values.find(key);
  if (it == f.values.end()) throw FormatError("missing field '" + key + "'");
  if (it->second.size() != 1) throw FormatError("field '" + key + "' needs exactly one value");
  return it->second.front();
}

Rational rational_field(const std::string& key, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw FormatError("field '" + key + "': " + e.what());
  }
}

long integer_field(const Fields& f, const std::string& key) {
  Rational v = rational_field(key, single(f, key));
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw FormatError("field '" + key + "' must be an integer");
  return v.get_num().get_si();
}

std::vector<Rational> sizes_field(const Fields& f) {
  auto it = f.values.find("sizes");
  if (it == f.values.end()) throw FormatError("missing field 'sizes'");
  std::vector<Rational> out;
  for (const auto& tok : it->second) out.push_back(rational_field("sizes", tok));
  return out;
}

template <class Fn>
void checked(const std::string& field, Fn&& fn) {
  try {
    fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError("field '" + field + "': " + e.what());
  }
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  Fields f = tokenize(text);
  const std::string& kind = single(f, "kind");
  if (kind == "scheduling") {
    SchedulingInstance inst;
    inst.m = integer_field(f, "m");
    inst.k = integer_field(f, "k");
    inst.U = rational_field("U", single(f, "U"));
    inst.job_sizes = sizes_field(f);
    checked("m", [&] { if (inst.m < 1) throw std::invalid_argument("must be positive"); });
    checked("k", [&] { if (inst.k < 1) throw std::invalid_argument("must be positive"); });
    checked("U", [&] { if (inst.U < 0) throw std::invalid_argument("must be nonnegative"); });
    checked("sizes", [&] { inst.validate(); });
    return inst;
  }
  if (kind == "packing") {
    if (f.values.count("m")) throw FormatError("field 'm' is not allowed for packing");
    PackingInstance inst;
    inst.k = integer_field(f, "k");
    inst.U = rational_field("U", single(f, "U"));
    inst.item_sizes = sizes_field(f);
    checked("k", [&] { if (inst.k < 1) throw std::invalid_argument("must be positive"); });
    checked("U", [&] { if (inst.U <= 0 || inst.U > 1) throw std::invalid_argument("must lie in (0,1]"); });
    checked("sizes", [&] { inst.validate(); });
    return inst;
  }
  throw FormatError("field 'kind' must be 'scheduling' or 'packing'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Instance parse_instance(const std::filesystem::path& path) { return parse_instance_text(read_file(path)); }

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  auto sizes = [&](const std::vector<Rational>& v) {
    out << "sizes";
    for (const auto& s : v) out << ' ' << to_string(s);
    out << '\n';
  };
  if (const auto* s = std::get_if<SchedulingInstance>(&inst)) {
    out << "kind scheduling\nm " << s->m << "\nk " << s->k << "\nU " << to_string(s->U) << '\n';
    sizes(s->job_sizes);
  } else {
    const auto& p = std::get<PackingInstance>(inst);
    out << "kind packing\nk " << p.k << "\nU " << to_string(p.U) << '\n';
    sizes(p.item_sizes);
  }
  return out.str();
}

Solution parse_solution_text(const std::string& text) {
  Fields f = tokenize(text);
  const std::string& kind = single(f, "kind");
  std::string group;
  if (kind == "schedule") {
    group = "machine";
  } else if (kind == "packing") {
    group = "bin";
  } else {
    throw FormatError("field 'kind' must be 'schedule' or 'packing'");
  }
  std::vector<IndexSet> groups;
  for (const auto& [key, rest] : f.ordered) {
    if (key == "kind" || key == "value") continue;
    if (key != group) throw FormatError("unexpected field '" + key + "'");
    IndexSet g;
    for (const auto& tok : rest) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty() || tok[0] == '-') throw FormatError("field '" + group + "': bad index '" + tok + "'");
      g.push_back(static_cast<Index>(v));
    }
    groups.push_back(std::move(g));
  }
  if (group == "machine") return Schedule{std::move(groups)};
  return Packing{std::move(groups)};
}

Solution parse_solution(const std::filesystem::path& path) { return parse_solution_text(read_file(path)); }

std::string emit_solution(const Instance& inst, const Solution& sol) {
  std::ostringstream out;
  auto groups = [&](const char* name, const std::vector<IndexSet>& gs) {
    for (const auto& g : gs) {
      out << name;
      for (Index i : g) out << ' ' << i;
      out << '\n';
    }
  };
  if (const auto* s = std::get_if<Schedule>(&sol)) {
    out << "kind schedule\n";
    groups("machine", s->machine_sets);
    out << "value " << to_string(makespan(std::get<SchedulingInstance>(inst), *s)) << '\n';
  } else {
    const auto& p = std::get<Packing>(sol);
    out << "kind packing\n";
    groups("bin", p.bins);
    out << "value " << p.bins.size() << '\n';
  }
  return out.str();
}

}  // namespace unavail
