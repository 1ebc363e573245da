// Copyright 2026 The uitx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Synthetic UI logs for the student-records routine (spreadsheet row copied
// field by field into a web form) and a harness that runs all three
// discovery strategies on them.

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uitx/json.hpp"
#include "uitx/pipeline.hpp"
#include "uitx/table.hpp"
#include "uitx/uilog.hpp"

namespace uitx {

namespace field {
inline constexpr std::string_view kFullName = "Full Name";
inline constexpr std::string_view kCountry = "Country";
inline constexpr std::string_view kDate = "Date";
inline constexpr std::string_view kPhone = "Phone";
inline constexpr std::string_view kEmail = "Email";
inline constexpr std::string_view kStreet = "Adress_Street";  // sic, as recorded by the form
inline constexpr std::string_view kCity = "Address_City";
inline constexpr std::string_view kRegion = "Address_Region";
inline constexpr std::string_view kZip = "Address_ZipCode";
inline constexpr std::string_view kAddressCountry = "Address_Country";
inline constexpr std::string_view kInternational = "International";
}  // namespace field

/// The nine form fields filled by pasting, in form order.
inline const std::vector<std::string>& traceable_fields() {
  static const std::vector<std::string> f{std::string(field::kFullName), std::string(field::kCountry),
                                          std::string(field::kDate),     std::string(field::kPhone),
                                          std::string(field::kEmail),    std::string(field::kStreet),
                                          std::string(field::kCity),     std::string(field::kRegion),
                                          std::string(field::kZip)};
  return f;
}

struct ScenarioSpec {
  std::size_t trace_count = 50;
  std::uint64_t seed = 0;
  double spaced_phone_rate = 0.3;     // "+ 61 0dd ..." instead of "+61 0dd ..."
  double two_word_suburb_rate = 0.4;  // "Port Melbourne" rather than "Richmond"
  double collision_rate = 0.2;        // reuse an earlier trace's suburb (same city, region, ZIP)
  bool inject_redundancy = true;
  bool table1_preset = false;              // first trace uses the running-example student
  std::vector<std::string> restrict_fields;  // empty: all nine fields

  void validate() const {
    for (double r : {spaced_phone_rate, two_word_suburb_rate, collision_rate}) {
      if (r < 0.0 || r > 1.0) throw Error(ErrorKind::InvalidArgument, "rates must lie in [0, 1]");
    }
    for (const auto& f : restrict_fields) {
      const auto& all = traceable_fields();
      if (std::find(all.begin(), all.end(), f) == all.end()) {
        throw Error(ErrorKind::InvalidArgument, "unknown field '" + f + "'");
      }
    }
  }

  bool includes(std::string_view f) const {
    return restrict_fields.empty() || std::find(restrict_fields.begin(), restrict_fields.end(), f) != restrict_fields.end();
  }

  bool operator==(const ScenarioSpec&) const = default;
};

inline void to_json(json& j, const ScenarioSpec& s) {
  j = json{{"trace_count", s.trace_count},
           {"seed", s.seed},
           {"spaced_phone_rate", s.spaced_phone_rate},
           {"two_word_suburb_rate", s.two_word_suburb_rate},
           {"collision_rate", s.collision_rate},
           {"inject_redundancy", s.inject_redundancy},
           {"table1_preset", s.table1_preset},
           {"restrict_fields", s.restrict_fields}};
}

// Missing keys keep their defaults.
inline void from_json(const json& j, ScenarioSpec& s) {
  s = ScenarioSpec{};
  s.trace_count = j.value("trace_count", s.trace_count);
  s.seed = j.value("seed", s.seed);
  s.spaced_phone_rate = j.value("spaced_phone_rate", s.spaced_phone_rate);
  s.two_word_suburb_rate = j.value("two_word_suburb_rate", s.two_word_suburb_rate);
  s.collision_rate = j.value("collision_rate", s.collision_rate);
  s.inject_redundancy = j.value("inject_redundancy", s.inject_redundancy);
  s.table1_preset = j.value("table1_preset", s.table1_preset);
  s.restrict_fields = j.value("restrict_fields", s.restrict_fields);
}

/// One spreadsheet row.
struct StudentRecord {
  std::string first_name;   // A
  std::string last_name;    // B
  std::string birth_date;   // C, dd/mm/yyyy
  std::string phone;        // D
  std::string email;        // E
  std::string country;      // F
  std::string address;      // G, "<street>, <suburb>, <state> <postcode>, Australia"

  bool operator==(const StudentRecord&) const = default;
};

inline StudentRecord running_example_student() {
  return {"Albert", "Rauf", "11/04/1986", "+ 61 043 512 4834", "arauf@gmail.com", "Germany",
          "99 Beacon Rd, Port Melbourne, VIC 3207, Australia"};
}

/// Source inputs and program that produce a target field from a record.
struct FieldTruth {
  std::string field;
  std::vector<std::string> inputs;
  std::string output;
  Program program;
};

inline std::vector<FieldTruth> ground_truth(const StudentRecord& s) {
  using Op = TransformOp;
  const Program address_prefix{{Op::split(0, ", ")}};
  auto with_prefix = [&](std::vector<Op> rest) {
    Program p = address_prefix;
    p.ops.insert(p.ops.end(), rest.begin(), rest.end());
    return p;
  };
  Program phone{{Op::split(0, " "), Op::drop(0)}};
  if (s.phone.rfind("+ ", 0) == 0) phone.ops.push_back(Op::drop(0));
  phone.ops.push_back(Op::join_char(0, "-"));
  phone.ops.push_back(Op::join_char(0, "-"));

  std::vector<FieldTruth> truths{
      {std::string(field::kFullName), {s.first_name, s.last_name}, {}, Program{{Op::join_char(0, " ")}}},
      {std::string(field::kCountry), {s.country}, {}, Program{}},
      {std::string(field::kDate), {s.birth_date}, {}, Program{{Op::replace(0, "/", "-")}}},
      {std::string(field::kPhone), {s.phone}, {}, phone},
      {std::string(field::kEmail), {s.email}, {}, Program{}},
      {std::string(field::kStreet), {s.address}, {}, with_prefix({Op::drop(1), Op::drop(1), Op::drop(1)})},
      {std::string(field::kCity), {s.address}, {}, with_prefix({Op::drop(0), Op::drop(1), Op::drop(1)})},
      {std::string(field::kRegion),
       {s.address},
       {},
       with_prefix({Op::drop(0), Op::drop(0), Op::drop(1), Op::split(0, " "), Op::drop(1)})},
      {std::string(field::kZip),
       {s.address},
       {},
       with_prefix({Op::drop(0), Op::drop(0), Op::drop(1), Op::split(0, " "), Op::drop(0)})},
  };
  for (auto& t : truths) t.output = run_program(t.program, Table{t.inputs}).rows.front().front();
  return truths;
}

namespace detail {

struct Suburb {
  std::string_view name;
  std::string_view state;
  std::string_view postcode;
};

inline constexpr std::array<Suburb, 24> kOneWordSuburbs{{
    {"Richmond", "VIC", "3121"},   {"Fitzroy", "VIC", "3065"},     {"Carlton", "VIC", "3053"},
    {"Brunswick", "VIC", "3056"},  {"Footscray", "VIC", "3011"},   {"Hawthorn", "VIC", "3122"},
    {"Prahran", "VIC", "3181"},    {"Geelong", "VIC", "3220"},     {"Parramatta", "NSW", "2150"},
    {"Manly", "NSW", "2095"},      {"Newtown", "NSW", "2042"},     {"Chatswood", "NSW", "2067"},
    {"Randwick", "NSW", "2031"},   {"Toowong", "QLD", "4066"},     {"Southport", "QLD", "4215"},
    {"Indooroopilly", "QLD", "4068"}, {"Glenelg", "SA", "5045"},   {"Norwood", "SA", "5067"},
    {"Subiaco", "WA", "6008"},     {"Fremantle", "WA", "6160"},    {"Scarborough", "WA", "6019"},
    {"Lindisfarne", "TAS", "7015"},   {"Braddon", "ACT", "2612"},     {"Parap", "NT", "0820"},
}};

inline constexpr std::array<Suburb, 16> kTwoWordSuburbs{{
    {"Port Melbourne", "VIC", "3207"}, {"South Melbourne", "VIC", "3205"}, {"St Kilda", "VIC", "3182"},
    {"Box Hill", "VIC", "3128"},       {"Glen Waverley", "VIC", "3150"},   {"Surry Hills", "NSW", "2010"},
    {"Bondi Beach", "NSW", "2026"},    {"Double Bay", "NSW", "2028"},      {"Potts Point", "NSW", "2011"},
    {"Fortitude Valley", "QLD", "4006"}, {"West End", "QLD", "4101"},      {"North Adelaide", "SA", "5006"},
    {"Mount Lawley", "WA", "6050"},    {"Sandy Bay", "TAS", "7005"},       {"North Hobart", "TAS", "7000"},
    {"Kings Cross", "NSW", "2011"},
}};

inline constexpr std::array<std::string_view, 30> kFirstNames{
    "Albert", "Igor",   "Wendy",  "Olivia", "Liam",  "Noah",   "Mia",    "Chloe",  "Jack",   "Ruby",
    "Oscar",  "Grace",  "Harry",  "Zoe",    "Lucas", "Ella",   "Mason",  "Aria",   "Ethan",  "Isla",
    "Leo",    "Sophie", "Henry",  "Ava",    "Finn",  "Layla",  "Hugo",   "Emily",  "Arjun",  "Mei"};

inline constexpr std::array<std::string_view, 30> kLastNames{
    "Rauf",    "Honchar", "Macdonald", "Nguyen", "Smith",  "Kowalski", "Rossi",   "Tanaka",  "Schmidt", "Dubois",
    "Silva",   "Murphy",  "Kim",       "Patel",  "Garcia", "Novak",    "Jensen",  "Okafor",  "Larsen",  "Moreau",
    "Fischer", "Brown",   "Wilson",    "Chen",   "Ivanov", "Haddad",   "Andersen", "Costa",  "Walsh",   "Sato"};

inline constexpr std::array<std::string_view, 16> kCountries{
    "Germany", "New Zealand", "Australia", "France", "Italy",   "Japan",        "Brazil",      "Canada",
    "India",   "China",       "Spain",     "Ukraine", "Vietnam", "South Africa", "United Kingdom", "Ireland"};

inline constexpr std::array<std::string_view, 24> kStreetNames{
    "Albert", "Beacon",  "Clarendon", "Collins", "Swanston", "Bourke",  "Flinders", "Chapel",
    "Lygon",  "Smith",   "Brunswick", "George",  "Pitt",     "Oxford",  "Crown",    "King",
    "Queen",  "William", "Hunter",    "Elizabeth", "Victoria", "Church", "Station", "High"};

inline constexpr std::array<std::string_view, 6> kStreetSuffixes{"St", "Rd", "Ave", "Pde", "Ct", "Dr"};

class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }
  template <class C>
  const auto& pick(const C& c) {
    return c[below(c.size())];
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string digits(Dice& dice, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + dice.below(10)));
  return s;
}

inline std::string two_digits(std::size_t v) { return (v < 10 ? "0" : "") + std::to_string(v); }

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Draws student records; streets and emails are unique within a log.
class StudentPool {
 public:
  explicit StudentPool(const ScenarioSpec& spec) : spec_(spec), dice_(spec.seed) {}

  StudentRecord next() {
    StudentRecord s;
    s.first_name = dice_.pick(kFirstNames);
    s.last_name = dice_.pick(kLastNames);
    s.birth_date = two_digits(dice_.between(1, 28)) + "/" + two_digits(dice_.between(1, 12)) + "/" +
                   std::to_string(dice_.between(1975, 2003));
    const std::string local = "0" + digits(dice_, 2) + " " + digits(dice_, 3) + " " + digits(dice_, 4);
    s.phone = (dice_.chance(spec_.spaced_phone_rate) ? "+ 61 " : "+61 ") + local;
    std::string email = lower(s.first_name.substr(0, 1)) + lower(s.last_name);
    for (std::size_t n = 2; !emails_.insert(email).second; ++n) {
      email = lower(s.first_name.substr(0, 1)) + lower(s.last_name) + std::to_string(n);
    }
    s.email = email + "@gmail.com";
    s.country = dice_.pick(kCountries);

    Suburb suburb;
    if (!used_.empty() && dice_.chance(spec_.collision_rate)) {
      suburb = dice_.pick(used_);
    } else if (dice_.chance(spec_.two_word_suburb_rate)) {
      suburb = dice_.pick(kTwoWordSuburbs);
    } else {
      suburb = dice_.pick(kOneWordSuburbs);
    }
    used_.push_back(suburb);
    std::string street;
    do {
      street = std::to_string(dice_.between(1, 399)) + " " + std::string(dice_.pick(kStreetNames)) + " " +
               std::string(dice_.pick(kStreetSuffixes));
    } while (!streets_.insert(street).second);
    s.address = street + ", " + std::string(suburb.name) + ", " + std::string(suburb.state) + " " +
                std::string(suburb.postcode) + ", Australia";
    return s;
  }

  void reserve(const StudentRecord& s) {
    emails_.insert(s.email.substr(0, s.email.find('@')));
    streets_.insert(s.address.substr(0, s.address.find(',')));
  }

 private:
  const ScenarioSpec& spec_;
  Dice dice_;
  std::set<std::string> emails_;
  std::set<std::string> streets_;
  std::vector<Suburb> used_;
};

struct Recorder {
  std::vector<UiAction> actions;
  Timestamp clock;

  void add(ActionKind kind, AppKind app, std::optional<std::string> content, std::string name, std::string value,
           std::chrono::seconds gap) {
    clock += gap;
    UiAction a;
    a.timestamp = clock;
    a.action_type = kind;
    a.source = app;
    a.content = std::move(content);
    a.field_name = std::move(name);
    a.field_value = std::move(value);
    actions.push_back(std::move(a));
  }
};

inline std::string cell(char column, std::size_t row) { return std::string(1, column) + std::to_string(row); }

// The routine for one record: copy a cell, paste it into one or more form
// fields, edit each field into shape, and finally submit.
inline std::vector<UiAction> record_trace(const StudentRecord& s, std::size_t row, const ScenarioSpec& spec,
                                          Timestamp start, Dice& timing) {
  Recorder rec{{}, start};
  auto gap = [&] { return std::chrono::seconds(timing.between(1, 7)); };
  auto copy = [&](char column, const std::string& value) {
    rec.add(ActionKind::CopyCell, AppKind::Worksheet, value, cell(column, row), value, gap());
  };
  auto fill = [&](std::string_view name, std::string_view click_name, const std::string& before,
                  const std::string& pasted, const std::string& after) {
    rec.add(ActionKind::ClickField, AppKind::Web, std::nullopt, std::string(click_name), before, gap());
    rec.add(ActionKind::Paste, AppKind::Web, pasted, std::string(name), before, gap());
    rec.add(ActionKind::EditField, AppKind::Web, std::nullopt, std::string(name), after, gap());
  };
  const auto truths = ground_truth(s);
  auto out = [&](std::string_view f) {
    return std::find_if(truths.begin(), truths.end(), [&](const FieldTruth& t) { return t.field == f; })->output;
  };

  if (spec.includes(field::kFullName)) {
    copy('A', s.first_name);
    fill(field::kFullName, field::kFullName, "", s.first_name, s.first_name);
    copy('B', s.last_name);
    fill(field::kFullName, field::kFullName, s.first_name, s.last_name, out(field::kFullName));
  }
  if (spec.includes(field::kCountry)) {
    copy('F', s.country);
    fill(field::kCountry, field::kCountry, "", s.country, out(field::kCountry));
  }
  if (spec.includes(field::kDate)) {
    copy('C', s.birth_date);
    fill(field::kDate, field::kDate, "", s.birth_date, out(field::kDate));
  }
  if (spec.includes(field::kPhone)) {
    copy('D', s.phone);
    fill(field::kPhone, field::kPhone, "", s.phone, out(field::kPhone));
  }
  if (spec.includes(field::kEmail)) {
    copy('E', s.email);
    fill(field::kEmail, field::kEmail, "", s.email, out(field::kEmail));
  }
  const bool any_address = spec.includes(field::kStreet) || spec.includes(field::kCity) ||
                           spec.includes(field::kRegion) || spec.includes(field::kZip);
  if (any_address) {
    copy('G', s.address);
    if (spec.includes(field::kStreet)) fill(field::kStreet, field::kStreet, "", s.address, out(field::kStreet));
    if (spec.includes(field::kCity)) fill(field::kCity, field::kCity, "", s.address, out(field::kCity));
    if (spec.includes(field::kRegion)) fill(field::kRegion, "Adress_Region", "", s.address, out(field::kRegion));
    if (spec.includes(field::kZip)) fill(field::kZip, field::kZip, "", s.address, out(field::kZip));
  }
  if (spec.restrict_fields.empty()) {
    rec.add(ActionKind::ClickField, AppKind::Web, std::nullopt, std::string(field::kAddressCountry), "", gap());
    rec.add(ActionKind::EditField, AppKind::Web, std::nullopt, std::string(field::kAddressCountry), "Australia", gap());
    rec.add(ActionKind::ClickCheckBox, AppKind::Web, std::nullopt, std::string(field::kInternational), "FALSE", gap());
    rec.add(ActionKind::EditField, AppKind::Web, std::nullopt, std::string(field::kInternational), "TRUE",
            std::chrono::seconds(0));
  }
  rec.add(ActionKind::ClickButton, AppKind::Web, std::nullopt, "Submit", "", gap());
  return rec.actions;
}

// Inserts actions the filter rules remove. Inserted actions reuse the
// timestamp of the action before them, so the remaining actions are
// untouched.
inline std::vector<UiAction> inject_redundancy(std::vector<UiAction> trace, const StudentRecord& s, std::size_t row,
                                               Dice& dice) {
  enum Kind { ExtraCopy, DoubleEdit, NavigationClick, DoubleClick };
  const std::size_t count = dice.between(1, 3);
  for (std::size_t n = 0; n < count; ++n) {
    const auto kind = static_cast<Kind>(dice.below(4));
    std::vector<std::size_t> spots;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      const UiAction& a = trace[i];
      const UiAction& prev = trace[i - 1];
      switch (kind) {
        case ExtraCopy:
          if (a.is(ActionKind::CopyCell)) spots.push_back(i);
          break;
        case DoubleEdit:
          if (a.is(ActionKind::EditField) && prev.is(ActionKind::Paste)) spots.push_back(i);
          break;
        case NavigationClick:
        case DoubleClick:
          if (a.is(ActionKind::ClickField) && a.source.kind == AppKind::Web && prev.is(ActionKind::CopyCell)) {
            spots.push_back(i);
          }
          break;
      }
    }
    if (spots.empty()) continue;
    const std::size_t at = dice.pick(spots);
    UiAction extra = trace[at];
    extra.timestamp = trace[at - 1].timestamp;
    switch (kind) {
      case ExtraCopy: {
        static constexpr std::string_view kColumns = "ABCDEFG";
        const std::array<const std::string*, 7> values{&s.first_name, &s.last_name, &s.birth_date, &s.phone,
                                                       &s.email,      &s.country,   &s.address};
        const std::size_t c = dice.below(kColumns.size());
        extra.content = *values[c];
        extra.field_value = *values[c];
        extra.field_name = cell(kColumns[c], row);
        break;
      }
      case DoubleEdit:
        // a first attempt that is later overwritten
        extra.field_value = trace[at - 1].content.value_or("");
        break;
      case NavigationClick:
        extra.source = AppKind::Worksheet;
        extra.field_name = cell(static_cast<char>('H' + dice.below(3)), row);
        extra.field_value = "";
        break;
      case DoubleClick: break;
    }
    trace.insert(trace.begin() + static_cast<std::ptrdiff_t>(at), std::move(extra));
  }
  return trace;
}

inline Timestamp first_timestamp() {
  using namespace std::chrono;
  return sys_days{year{2019} / March / 3} + hours{19} + minutes{2} + seconds{18};
}

}  // namespace detail

/// Generated log with the records behind it.
struct GeneratedLog {
  std::vector<UiAction> actions;
  std::vector<StudentRecord> records;           // one per trace
  std::vector<std::vector<UiAction>> clean;     // each trace without injected redundancy
};

inline GeneratedLog generate_scenario(const ScenarioSpec& spec) {
  spec.validate();
  GeneratedLog log;
  detail::StudentPool pool(spec);
  detail::Dice timing(spec.seed ^ 0x7469'6D69'6E67ULL);
  detail::Dice noise(spec.seed ^ 0x6E6F'6973'65ULL);
  Timestamp clock = detail::first_timestamp() - std::chrono::seconds(1);
  for (std::size_t t = 0; t < spec.trace_count; ++t) {
    StudentRecord s;
    if (t == 0 && spec.table1_preset) {
      s = running_example_student();
      pool.reserve(s);
    } else {
      s = pool.next();
    }
    const std::size_t row = 3 + t;
    auto trace = detail::record_trace(s, row, spec, clock, timing);
    clock = trace.back().timestamp + std::chrono::seconds(timing.between(10, 40));
    log.clean.push_back(trace);
    if (spec.inject_redundancy && !(t == 0 && spec.table1_preset)) {
      trace = detail::inject_redundancy(std::move(trace), s, row, noise);
    }
    log.actions.insert(log.actions.end(), trace.begin(), trace.end());
    log.records.push_back(std::move(s));
  }
  return log;
}

inline std::vector<UiAction> generate_log(const ScenarioSpec& spec) { return generate_scenario(spec).actions; }

struct BenchmarkReport {
  ScenarioSpec spec;
  Preprocessed input;
  std::vector<DiscoveryReport> reports;  // Baseline, Opt1, Opt1Opt2
};

inline BenchmarkReport run_benchmark(const ScenarioSpec& spec, const PipelineOptions& options = {}) {
  BenchmarkReport b;
  b.spec = spec;
  const auto log = generate_log(spec);
  b.input = preprocess(log);
  for (auto s : {Strategy::Baseline, Strategy::Opt1, Strategy::Opt1Opt2}) b.reports.push_back(discover(s, b.input.traces, options));
  return b;
}

namespace detail {

inline const TargetResult* find_result(const DiscoveryReport& r, std::string_view field) {
  for (const auto& t : r.results) {
    if (t.target.field == field) return &t;
  }
  return nullptr;
}

inline std::string cell_text(const TargetResult* r) {
  if (!r) return "-";
  if (r->discovered()) return seconds_text(r->elapsed);
  return status_text(*r) + " " + seconds_text(r->elapsed);
}

}  // namespace detail

/// Per-transformation rows: target, one example and the time per strategy.
inline std::string render_transformations(const BenchmarkReport& b) {
  std::string out = "| Transformation | Example | Baseline | Opt 1 | Opt 1 + Opt 2 |\n|---|---|---|---|---|\n";
  const auto per_target = extract_examples_per_target(b.input.traces);
  for (const auto& [target, examples] : per_target) {
    std::string example;
    for (const auto& v : examples.front().input_values()) example += (example.empty() ? "\"" : ", \"") + v + "\"";
    example += " => \"" + examples.front().outputs.front().value + "\"";
    out += "| " + target.field + " | " + example + " | - | ";
    out += detail::cell_text(detail::find_result(b.reports[1], target.field)) + " | ";
    out += detail::cell_text(detail::find_result(b.reports[2], target.field)) + " |\n";
  }
  return out;
}

inline std::string render_benchmark_markdown(const BenchmarkReport& b) {
  return "## Strategies\n\n" + render_comparison(b.reports) + "\n## Transformations\n\n" + render_transformations(b);
}

/// strategy,target,status,elapsed_ms,groups,programs
inline std::string render_benchmark_csv(const BenchmarkReport& b) {
  std::string out = "strategy,target,status,elapsed_ms,groups,programs\n";
  for (const auto& r : b.reports) {
    for (const auto& t : r.results) {
      std::vector<std::string> row{std::string(to_string(r.strategy)), t.target.field,
                                   t.discovered() ? "found" : detail::status_text(t), std::to_string(t.elapsed.count()),
                                   std::to_string(t.group_count), std::to_string(t.entries.size())};
      csv::write_record(out, row);
    }
  }
  return out;
}

inline void to_json(json& j, const BenchmarkReport& b) {
  j = json{{"spec", b.spec}, {"preprocess", segmentation_json(b.input)}, {"reports", b.reports}};
}

}  // namespace uitx
