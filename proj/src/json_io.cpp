#include "oneway/json_io.hpp"

#include <cstdio>

#include "oneway/mub.hpp"

namespace oneway {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw validation_error("malformed input: " + what);
}

double number_at(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

int int_at(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<std::string> labels_at(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) malformed(std::string(what) + " must be a nonempty array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) malformed(std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json dense_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix dense_from_json(const json& j) {
  if (!j.is_object()) malformed("dense operator must be an object");
  const int d = int_at(field(j, "dim"), "dim");
  if (d < 1 || d > 64) malformed("dense operator dim out of range [1, 64]");
  const json& re = field(j, "re");
  const json& im = field(j, "im");
  if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(d) ||
      im.size() != static_cast<std::size_t>(d))
    malformed("re/im must be dim x dim arrays");
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    const json& re_row = re[static_cast<std::size_t>(r)];
    const json& im_row = im[static_cast<std::size_t>(r)];
    if (!re_row.is_array() || !im_row.is_array() || re_row.size() != static_cast<std::size_t>(d) ||
        im_row.size() != static_cast<std::size_t>(d))
      malformed("re/im must be dim x dim arrays");
    for (int c = 0; c < d; ++c)
      m(r, c) = cplx(number_at(re_row[static_cast<std::size_t>(c)], "re entry"),
                     number_at(im_row[static_cast<std::size_t>(c)], "im entry"));
  }
  return m;
}

std::pair<TaskSpaces, QuantumStrategy> strategy_from_json(const json& j) {
  if (!j.is_object()) malformed("strategy must be an object");
  const PrimeDim d(int_at(field(j, "dim"), "dim"));
  TaskSpaces s(d, labels_at(field(j, "X"), "X"), labels_at(field(j, "Y"), "Y"),
               labels_at(field(j, "B"), "B"));

  QuantumStrategy q;
  const json& enc = field(j, "encode");
  if (!enc.is_object()) malformed("encode must be an object keyed by input label");
  for (const std::string& x : s.X()) {
    const auto it = enc.find(x);
    if (it == enc.end()) malformed("encode is missing input '" + x + "'");
    const json& e = *it;
    const std::string type = field(e, "type").get<std::string>();
    if (type == "stabilizer") {
      const StabilizerStateId id{int_at(field(e, "k"), "k"), int_at(field(e, "j"), "j")};
      check_state_id(d, id);
      q.encode.emplace_back(id);
    } else if (type == "bloch") {
      const json& n = field(e, "n");
      if (!n.is_array() || n.size() != 3) malformed("bloch vector needs 3 components");
      q.encode.emplace_back(BlochVector{number_at(n[0], "n"), number_at(n[1], "n"),
                                        number_at(n[2], "n")});
    } else if (type == "matrix") {
      q.encode.emplace_back(dense_from_json(e));
    } else {
      malformed("unknown encode type '" + type + "'");
    }
  }

  const json& dec = field(j, "decode");
  if (!dec.is_object()) malformed("decode must be an object keyed by question label");
  for (const std::string& y : s.Y()) {
    const auto it = dec.find(y);
    if (it == dec.end()) malformed("decode is missing question '" + y + "'");
    const json& m = *it;
    const std::string type = field(m, "type").get<std::string>();
    if (type == "mub") {
      const int k = int_at(field(m, "k"), "k");
      check_state_id(d, StabilizerStateId{k, 0});
      q.decode.emplace_back(MubMeasurement{k});
    } else if (type == "povm") {
      const json& eff = field(m, "effects");
      if (!eff.is_array() || eff.empty()) malformed("povm needs a nonempty effects array");
      PovmMeasurement povm;
      for (const auto& e : eff) povm.effects.push_back(dense_from_json(e));
      q.decode.emplace_back(std::move(povm));
    } else {
      malformed("unknown decode type '" + type + "'");
    }
  }

  q.post.assign(s.ny(), {});
  if (j.contains("post")) {
    const json& post = j.at("post");
    if (!post.is_object()) malformed("post must be an object keyed by question label");
    for (auto it = post.begin(); it != post.end(); ++it) {
      const std::size_t y = s.y_index(it.key());
      for (const auto& b : *it) {
        if (b.is_string())
          q.post[y].push_back(static_cast<int>(s.b_index(b.get<std::string>())));
        else
          q.post[y].push_back(int_at(b, "post entry"));
      }
    }
  }
  return {std::move(s), std::move(q)};
}

json strategy_to_json(const TaskSpaces& s, const QuantumStrategy& q) {
  json j{{"dim", s.dim()}, {"X", s.X()}, {"Y", s.Y()}, {"B", s.B()}};
  json enc = json::object();
  for (std::size_t x = 0; x < s.nx(); ++x) {
    if (const auto* id = std::get_if<StabilizerStateId>(&q.encode[x]))
      enc[s.X()[x]] = {{"type", "stabilizer"}, {"k", id->k}, {"j", id->j}};
    else if (const auto* n = std::get_if<BlochVector>(&q.encode[x]))
      enc[s.X()[x]] = {{"type", "bloch"}, {"n", {n->nx, n->ny, n->nz}}};
    else {
      json m = dense_to_json(std::get<Matrix>(q.encode[x]));
      m["type"] = "matrix";
      enc[s.X()[x]] = std::move(m);
    }
  }
  j["encode"] = std::move(enc);
  json dec = json::object();
  for (std::size_t y = 0; y < s.ny(); ++y) {
    if (const auto* mub = std::get_if<MubMeasurement>(&q.decode[y]))
      dec[s.Y()[y]] = {{"type", "mub"}, {"k", mub->k}};
    else {
      json effects = json::array();
      for (const Matrix& e : std::get<PovmMeasurement>(q.decode[y]).effects)
        effects.push_back(dense_to_json(e));
      dec[s.Y()[y]] = {{"type", "povm"}, {"effects", std::move(effects)}};
    }
  }
  j["decode"] = std::move(dec);
  json post = json::object();
  bool any_post = false;
  for (std::size_t y = 0; y < s.ny(); ++y)
    if (!q.post[y].empty()) {
      post[s.Y()[y]] = q.post[y];
      any_post = true;
    }
  if (any_post) j["post"] = std::move(post);
  return j;
}

namespace {

// Reads parallel "<side>_labels" / "<side>_cells" arrays; labels keep file order.
void read_side(const json& j, const char* side, std::vector<std::string>& labels,
               std::vector<int>& cells) {
  const json& lab = field(j, (std::string(side) + "_labels").c_str());
  const json& cel = field(j, (std::string(side) + "_cells").c_str());
  if (!lab.is_array() || lab.empty() || !cel.is_array())
    malformed("labels and cells must be nonempty arrays");
  if (lab.size() != cel.size()) malformed("labels and cells must have equal length");
  for (const json& e : lab) {
    if (!e.is_string()) malformed("labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  for (const json& e : cel) cells.push_back(int_at(e, "cell"));
}

}  // namespace

std::pair<TaskSpaces, Partitions> partitions_from_json(const json& j) {
  if (!j.is_object()) malformed("partition file must be an object");
  const PrimeDim d(int_at(field(j, "dim"), "dim"));
  std::vector<std::string> xs, ys, bs;
  Partitions p;
  read_side(j, "x", xs, p.x_cells);
  read_side(j, "y", ys, p.y_cells);
  for (int b = 0; b < d.value(); ++b) bs.push_back(std::to_string(b));
  TaskSpaces s(d, std::move(xs), std::move(ys), std::move(bs));
  validate_partitions(s, p);
  return {std::move(s), std::move(p)};
}

json partitions_to_json(const TaskSpaces& s, const Partitions& p) {
  validate_partitions(s, p);
  json xl = json::array(), xc = json::array(), yl = json::array(), yc = json::array();
  for (std::size_t x = 0; x < s.nx(); ++x) {
    xl.push_back(s.X()[x]);
    xc.push_back(p.x_cells[x]);
  }
  for (std::size_t y = 0; y < s.ny(); ++y) {
    yl.push_back(s.Y()[y]);
    yc.push_back(p.y_cells[y]);
  }
  return {{"dim", s.dim()},
          {"x_labels", std::move(xl)},
          {"x_cells", std::move(xc)},
          {"y_labels", std::move(yl)},
          {"y_cells", std::move(yc)}};
}

json correlation_to_json(const Correlation& c) {
  const TaskSpaces& s = c.spaces();
  json entries = json::array();
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      for (std::size_t b = 0; b < s.nb(); ++b) {
        json e{{"x", s.X()[x]}, {"y", s.Y()[y]}, {"b", s.B()[b]}};
        if (c.mode() == ArithmeticMode::exact)
          e["p"] = to_string(c.exact_at(x, y, b));
        else
          e["p"] = c.at(x, y, b);
        entries.push_back(std::move(e));
      }
  return {{"arithmetic", c.mode() == ArithmeticMode::exact ? "exact" : "floating"},
          {"dim", s.dim()},
          {"entries", std::move(entries)}};
}

std::string correlation_to_csv(const Correlation& c) {
  const TaskSpaces& s = c.spaces();
  std::string out = "x,y,b,p\n";
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      for (std::size_t b = 0; b < s.nb(); ++b) {
        out += s.X()[x] + "," + s.Y()[y] + "," + s.B()[b] + ",";
        out += c.mode() == ArithmeticMode::exact ? to_string(c.exact_at(x, y, b))
                                                 : format_double(c.at(x, y, b));
        out += "\n";
      }
  return out;
}

}  // namespace oneway
