#include "tempora/json_io.hpp"

#include <fstream>

#include "tempora/errors.hpp"

namespace tempora {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing JSON field '") + key + "'");
  return j.at(key).get<T>();
}

int label_of(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw ValidationError("outcome label '" + s + "' is not an integer");
  return v;
}

}  // namespace

void to_json(json& j, const CMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void from_json(const json& j, CMatrix& m) {
  const auto rows = get<std::size_t>(j, "rows");
  const auto cols = get<std::size_t>(j, "cols");
  const json& e = j.at("entries");
  if (!e.is_array()) throw ValidationError("matrix entries must be an array");
  std::vector<cplx> data;
  data.reserve(e.size());
  for (const auto& z : e) {
    if (z.is_number()) data.emplace_back(z.get<double>(), 0.0);
    else if (z.is_array() && z.size() == 2) data.emplace_back(z[0].get<double>(), z[1].get<double>());
    else throw ValidationError("matrix entries must be [re, im] pairs");
  }
  m = CMatrix(rows, cols, std::move(data));
}

void to_json(json& j, const SpaceSpec& s) {
  j = json::array();
  for (const auto& f : s.factors()) j.push_back({{"label", f.label}, {"dim", f.dim}});
}

void from_json(const json& j, SpaceSpec& s) {
  if (!j.is_array()) throw ValidationError("slot list must be an array");
  std::vector<SpaceSpec::Factor> f;
  for (const auto& e : j) f.push_back({get<std::string>(e, "label"), get<std::size_t>(e, "dim")});
  s = SpaceSpec(std::move(f));
}

void to_json(json& j, const Pdm& r) {
  to_json(j, r.matrix);
  j["events"] = r.events;
}

void from_json(const json& j, Pdm& r) {
  from_json(j, r.matrix);
  r.events = get<std::size_t>(j, "events");
  r.validate();
}

void to_json(json& j, const ProcessMatrix& w) {
  to_json(j, w.matrix);
  j["slots"] = w.spec;
}

void from_json(const json& j, ProcessMatrix& w) {
  from_json(j, w.matrix);
  w.spec = get<SpaceSpec>(j, "slots");
  w.validate_shape();
}

void to_json(json& j, const CorrelationTable& t) {
  json p = json::array();
  for (std::size_t a = 0; a < t.k_a; ++a) {
    json pa = json::array();
    for (std::size_t b = 0; b < t.k_b; ++b) {
      json pb = json::array();
      for (std::size_t x = 0; x < t.m_a; ++x) {
        json px = json::array();
        for (std::size_t y = 0; y < t.m_b; ++y) px.push_back(t.at(a, b, x, y));
        pb.push_back(std::move(px));
      }
      pa.push_back(std::move(pb));
    }
    p.push_back(std::move(pa));
  }
  j = json{{"m_a", t.m_a}, {"m_b", t.m_b}, {"k_a", t.k_a}, {"k_b", t.k_b}, {"p", std::move(p)}};
}

void from_json(const json& j, CorrelationTable& t) {
  t = CorrelationTable(get<std::size_t>(j, "m_a"), get<std::size_t>(j, "m_b"), get<std::size_t>(j, "k_a"),
                       get<std::size_t>(j, "k_b"));
  const json& p = j.at("p");
  try {
    for (std::size_t a = 0; a < t.k_a; ++a)
      for (std::size_t b = 0; b < t.k_b; ++b)
        for (std::size_t x = 0; x < t.m_a; ++x)
          for (std::size_t y = 0; y < t.m_b; ++y) t.at(a, b, x, y) = p.at(a).at(b).at(x).at(y).get<double>();
  } catch (const json::out_of_range&) {
    throw DimensionError("correlation table array does not match m_a, m_b, k_a, k_b");
  }
}

void to_json(json& j, const HistoryFamily& f) {
  json steps = json::array();
  for (const auto& s : f.steps) steps.push_back({{"unitary", s.unitary}, {"projectors", s.projectors}});
  j = json{{"rho0", f.rho0}, {"steps", std::move(steps)}};
}

void from_json(const json& j, HistoryFamily& f) {
  f.rho0 = get<CMatrix>(j, "rho0");
  f.steps.clear();
  for (const auto& s : j.at("steps")) {
    HistoryStep st;
    st.projectors = get<std::vector<CMatrix>>(s, "projectors");
    st.unitary = s.contains("unitary") ? s.at("unitary").get<CMatrix>() : CMatrix::identity(f.rho0.rows());
    f.steps.push_back(std::move(st));
  }
}

void to_json(json& j, const Channel& c) { j = json{{"kraus", c.kraus}}; }
void from_json(const json& j, Channel& c) { c.kraus = get<std::vector<CMatrix>>(j, "kraus"); }

void to_json(json& j, const Instrument& in) {
  json o = json::object();
  for (const auto& [a, ks] : in.outcomes) o[std::to_string(a)] = ks;
  j = json{{"outcomes", std::move(o)}};
}

void from_json(const json& j, Instrument& in) {
  in.outcomes.clear();
  for (const auto& [k, v] : j.at("outcomes").items()) in.outcomes[label_of(k)] = v.get<std::vector<CMatrix>>();
}

void to_json(json& j, const Povm& p) {
  json o = json::object();
  for (const auto& [b, e] : p.effects) o[std::to_string(b)] = e;
  j = json{{"effects", std::move(o)}};
}

void from_json(const json& j, Povm& p) {
  p.effects.clear();
  for (const auto& [k, v] : j.at("effects").items()) p.effects[label_of(k)] = v.get<CMatrix>();
}

void to_json(json& j, const Strategy& s) {
  json second = json::array();
  for (const auto& m : s.second) {
    json o = json::object();
    for (const auto& [a, povm] : m) o[std::to_string(a)] = povm;
    second.push_back(std::move(o));
  }
  j = json{{"lambda_dist", s.lambda_dist}, {"first", s.first}, {"memory", s.memory}, {"second", std::move(second)}};
}

void from_json(const json& j, Strategy& s) {
  s.lambda_dist = get<std::vector<double>>(j, "lambda_dist");
  s.first = get<std::vector<Instrument>>(j, "first");
  s.memory = get<Channel>(j, "memory");
  s.second.clear();
  for (const auto& o : j.at("second")) {
    std::map<int, Povm> m;
    for (const auto& [k, v] : o.items()) m[label_of(k)] = v.get<Povm>();
    s.second.push_back(std::move(m));
  }
}

void to_json(json& j, const GameSpec& g) {
  j = json{{"n_x", g.n_x}, {"n_y", g.n_y}, {"n_a", g.n_a}, {"n_b", g.n_b}, {"pi", g.pi}, {"l", g.l}};
}

void from_json(const json& j, GameSpec& g) {
  g.n_x = get<std::size_t>(j, "n_x");
  g.n_y = get<std::size_t>(j, "n_y");
  g.n_a = get<std::size_t>(j, "n_a");
  g.n_b = get<std::size_t>(j, "n_b");
  g.pi = get<std::vector<double>>(j, "pi");
  g.l = get<std::vector<double>>(j, "l");
  g.validate();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace tempora
