#include "actdyn/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include "json.hpp"
#include <ostream>
#include <set>
#include <sstream>

#include "actdyn/error.hpp"

namespace actdyn::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

double parse_double(std::string_view s, const std::string& where) {
  double v = 0.0;
  if (!parse_number(s, v)) throw InputError(where + ": not a number: '" + std::string(s) + "'");
  return v;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) return true;
  }
  return false;
}

int digits(std::string_view s, std::size_t pos, std::size_t count) {
  if (pos + count > s.size()) throw InputError("truncated timestamp");
  int v = 0;
  for (std::size_t k = pos; k < pos + count; ++k) {
    if (s[k] < '0' || s[k] > '9') throw InputError("bad digit in timestamp");
    v = v * 10 + (s[k] - '0');
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_date(Day d) {
  const std::chrono::year_month_day ymd{d};
  std::ostringstream os;
  os << std::setfill('0') << std::setw(4) << static_cast<int>(ymd.year()) << '-' << std::setw(2)
     << static_cast<unsigned>(ymd.month()) << '-' << std::setw(2) << static_cast<unsigned>(ymd.day());
  return os.str();
}

Day parse_date(std::string_view text) {
  text = trim(text);
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') {
    throw InputError("not a YYYY-MM-DD date: '" + std::string(text) + "'");
  }
  const std::chrono::year_month_day ymd{std::chrono::year{digits(text, 0, 4)},
                                        std::chrono::month{static_cast<unsigned>(digits(text, 5, 2))},
                                        std::chrono::day{static_cast<unsigned>(digits(text, 8, 2))}};
  if (!ymd.ok()) throw InputError("invalid calendar date: '" + std::string(text) + "'");
  return Day{ymd};
}

std::int64_t parse_timestamp(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty timestamp");
  std::int64_t epoch = 0;
  if (parse_number(text, epoch)) return epoch;

  const Day day = parse_date(text);
  std::int64_t secs = static_cast<std::int64_t>(day.time_since_epoch().count()) * 86400;
  std::size_t pos = 10;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
    const int hh = digits(text, pos + 1, 2);
    if (text.size() < pos + 6 || text[pos + 3] != ':') throw InputError("bad time of day");
    const int mm = digits(text, pos + 4, 2);
    int ss = 0;
    pos += 6;
    if (pos < text.size() && text[pos] == ':') {
      ss = digits(text, pos + 1, 2);
      pos += 3;
    }
    if (hh > 23 || mm > 59 || ss > 60) throw InputError("time of day out of range");
    secs += hh * 3600 + mm * 60 + ss;
    if (pos < text.size() && (text[pos] == '.' || text[pos] == ',')) {
      ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    }
    if (pos < text.size()) {
      const char c = text[pos];
      if (c == 'Z' || c == 'z') {
        ++pos;
      } else if (c == '+' || c == '-') {
        const int oh = digits(text, pos + 1, 2);
        std::size_t next = pos + 3;
        int om = 0;
        if (next < text.size() && text[next] == ':') ++next;
        if (next < text.size()) {
          om = digits(text, next, 2);
          next += 2;
        }
        const int offset = (oh * 3600 + om * 60) * (c == '+' ? 1 : -1);
        secs -= offset;
        pos = next;
      }
    }
  }
  if (pos != text.size()) throw InputError("trailing characters in timestamp '" + std::string(text) + "'");
  return secs;
}

std::vector<ContributionEvent> read_events_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("no events");
  const auto header = split(line, ',');
  const std::vector<std::string_view> expected{"timestamp", "user", "kind", "artifact", "parent"};
  if (header != expected) {
    throw InputError(at_line(lineno) + ": expected header 'timestamp,user,kind,artifact,parent'");
  }
  std::vector<ContributionEvent> events;
  while (next_line(in, line, lineno)) {
    const auto f = split(line, ',');
    if (f.size() != 5) throw InputError(at_line(lineno) + ": expected 5 fields, got " + std::to_string(f.size()));
    ContributionEvent e;
    try {
      e.timestamp = parse_timestamp(f[0]);
    } catch (const InputError& ex) {
      throw InputError(at_line(lineno) + ": unparseable timestamp '" + std::string(f[0]) + "' (" + ex.what() + ")");
    }
    e.user = f[1];
    if (e.user.empty()) throw InputError(at_line(lineno) + ": empty user");
    if (f[2] == "post") {
      e.kind = EventKind::Post;
    } else if (f[2] == "reply") {
      e.kind = EventKind::Reply;
    } else {
      throw InputError(at_line(lineno) + ": kind must be 'post' or 'reply', got '" + std::string(f[2]) + "'");
    }
    e.artifact = f[3];
    e.parent = f[4];
    if (e.kind == EventKind::Post && !e.parent.empty()) {
      throw InputError(at_line(lineno) + ": posts must have an empty parent");
    }
    events.push_back(std::move(e));
  }
  if (events.empty()) throw InputError("no events");
  return events;
}

void write_edge_list(std::ostream& out, const CollaborationNetwork& net) {
  for (const auto& [i, j] : net.edges()) out << net.user(i) << '\t' << net.user(j) << '\n';
}

CollaborationNetwork read_edge_list(std::istream& in, const std::vector<std::string>& extra_users) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    if (trim(line).front() == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      throw InputError(at_line(lineno) + ": expected 'userA<TAB>userB'");
    }
    edges.emplace_back(std::string(f[0]), std::string(f[1]));
  }
  return CollaborationNetwork::from_named_edges(extra_users, edges);
}

std::string network_sidecar_json(const CollaborationNetwork& net, const double* kappa1) {
  nlohmann::ordered_json j;
  j["n"] = net.node_count();
  j["m"] = net.edge_count();
  j["isolated_node_count"] = net.isolated_node_count();
  auto isolated = nlohmann::json::array();
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    if (net.degree(i) == 0) isolated.push_back(net.user(i));
  }
  j["isolated_users"] = isolated;
  if (kappa1 != nullptr) j["kappa1"] = *kappa1;
  return j.dump(2) + "\n";
}

std::vector<std::string> sidecar_isolated_users(std::istream& in) {
  try {
    const auto j = nlohmann::json::parse(in);
    if (!j.contains("isolated_users")) return {};
    return j.at("isolated_users").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad network sidecar: ") + ex.what());
  }
}

CollaborationNetwork load_network(const std::filesystem::path& edges) {
  std::ifstream in(edges);
  if (!in) throw InputError("cannot open network file " + edges.string());
  std::vector<std::string> extra;
  const auto sidecar = std::filesystem::path(edges.string() + ".json");
  if (std::filesystem::exists(sidecar)) {
    std::ifstream sj(sidecar);
    extra = sidecar_isolated_users(sj);
  }
  return read_edge_list(in, extra);
}

void save_network(const std::filesystem::path& edges, const CollaborationNetwork& net, const double* kappa1) {
  std::ofstream out(edges);
  if (!out) throw InputError("cannot write " + edges.string());
  write_edge_list(out, net);
  std::ofstream sj(edges.string() + ".json");
  if (!sj) throw InputError("cannot write sidecar for " + edges.string());
  sj << network_sidecar_json(net, kappa1);
}

void write_activity_csv(std::ostream& out, const ActivitySeries& series) {
  out << "user,week_start,value\n";
  for (std::size_t u = 0; u < series.n_users(); ++u) {
    for (std::size_t w = 0; w < series.n_weeks(); ++w) {
      out << series.users[u] << ',' << format_date(series.weeks[w]) << ',' << format_double(series.at(u, w))
          << '\n';
    }
  }
}

ActivitySeries read_activity_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("empty activity file");
  if (split(line, ',') != std::vector<std::string_view>{"user", "week_start", "value"}) {
    throw InputError(at_line(lineno) + ": expected header 'user,week_start,value'");
  }
  std::map<std::string, std::map<Day, double>> cells;
  std::set<Day> weeks;
  std::vector<std::string> order;
  while (next_line(in, line, lineno)) {
    const auto f = split(line, ',');
    if (f.size() != 3 || f[0].empty()) throw InputError(at_line(lineno) + ": expected 'user,week_start,value'");
    Day d;
    try {
      d = parse_date(f[1]);
    } catch (const InputError& ex) {
      throw InputError(at_line(lineno) + ": " + ex.what());
    }
    if (iso_week_start(d) != d) throw InputError(at_line(lineno) + ": week_start is not a Monday");
    const double v = parse_double(f[2], at_line(lineno));
    const std::string user(f[0]);
    if (!cells.count(user)) order.push_back(user);
    if (!cells[user].emplace(d, v).second) throw InputError(at_line(lineno) + ": duplicate (user, week) cell");
    weeks.insert(d);
  }
  if (weeks.empty()) throw InputError("activity file has no rows");

  ActivitySeries s;
  s.provenance = Provenance::Smoothed;
  for (Day d = *weeks.begin(); d <= *weeks.rbegin(); d += std::chrono::days{7}) {
    s.weeks.push_back(d);
    s.days_covered.push_back(7);
  }
  s.users = order;
  s.values.assign(s.users.size() * s.weeks.size(), 0.0);
  for (std::size_t u = 0; u < s.users.size(); ++u) {
    for (const auto& [d, v] : cells[s.users[u]]) {
      s.at(u, static_cast<std::size_t>((d - s.weeks.front()).count() / 7)) = v;
    }
  }
  s.validate();
  return s;
}

void write_ratio_csv(std::ostream& out, const RatioSeries& ratios, const std::vector<Day>& weeks) {
  if (weeks.empty()) throw std::invalid_argument("write_ratio_csv: no week labels");
  out << "target_week,ratio,converged,iterations,objective\n";
  for (const auto& e : ratios.entries) {
    const Day target = weeks.front() + std::chrono::days{7 * static_cast<long>(e.target_week)};
    out << format_date(target) << ',';
    if (e.ok()) {
      out << format_double(e.ratio) << ',' << (e.converged ? "true" : "false") << ',' << e.iterations << ','
          << format_double(e.objective) << '\n';
    } else {
      out << "nan,false," << e.iterations << ",nan\n";
    }
  }
}

std::vector<RatioRow> read_ratio_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("empty ratio file");
  if (split(line, ',') !=
      std::vector<std::string_view>{"target_week", "ratio", "converged", "iterations", "objective"}) {
    throw InputError(at_line(lineno) + ": expected header 'target_week,ratio,converged,iterations,objective'");
  }
  std::vector<RatioRow> rows;
  while (next_line(in, line, lineno)) {
    const auto f = split(line, ',');
    if (f.size() != 5) throw InputError(at_line(lineno) + ": expected 5 fields");
    if (f[1] == "nan") continue;  // failed window
    RatioRow r;
    try {
      r.target_week = parse_date(f[0]);
    } catch (const InputError& ex) {
      throw InputError(at_line(lineno) + ": " + ex.what());
    }
    r.ratio = parse_double(f[1], at_line(lineno));
    r.converged = f[2] == "true";
    if (!parse_number(f[3], r.iterations)) throw InputError(at_line(lineno) + ": bad iteration count");
    r.objective = f[4] == "nan" ? 0.0 : parse_double(f[4], at_line(lineno));
    rows.push_back(r);
  }
  return rows;
}

void write_trace_csv(std::ostream& out, const SimulationTrace& trace) {
  out << "step,tau,aggregate_activity\n";
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    out << k << ',' << format_double(trace.states[k].tau) << ',' << format_double(trace.aggregate[k]) << '\n';
  }
}

void write_trace_wide_csv(std::ostream& out, const SimulationTrace& trace, const CollaborationNetwork& net) {
  out << "step,tau";
  for (const auto& u : net.users()) out << ',' << u;
  out << '\n';
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    out << k << ',' << format_double(trace.states[k].tau);
    for (double v : trace.states[k].x) out << ',' << format_double(v);
    out << '\n';
  }
}

std::map<std::string, std::string> read_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw InputError("config " + at_line(lineno) + ": expected 'key = value'");
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    if (key.empty()) throw InputError("config " + at_line(lineno) + ": empty key");
    kv[std::string(key)] = std::string(value);
  }
  return kv;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
  return os.str();
}

}  // namespace actdyn::io
