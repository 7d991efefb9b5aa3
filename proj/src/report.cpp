#include "emlab/report.hpp"

#include <cstdio>
#include <sstream>

namespace emlab {

namespace {

constexpr int kSchemaVersion = 1;

std::string_view arity_name(WeightArity arity) {
  switch (arity) {
    case WeightArity::None:
      return "none";
    case WeightArity::XYZ:
      return "xyz";
    case WeightArity::UVW:
      return "uvw";
    case WeightArity::Both:
      return "xyz+uvw";
  }
  return "unknown";
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

// Minimal streaming JSON writer with caller-controlled key order.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(std::string_view name) {
    comma();
    out_ += '"';
    out_ += json_escape(name);
    out_ += "\":";
    pending_value_ = true;
  }

  void value(double v) { raw(format_double(v)); }
  void value(std::uint64_t v) { raw(std::to_string(v)); }
  void value(int v) { raw(std::to_string(v)); }
  void value(bool v) { raw(v ? "true" : "false"); }
  void value(std::string_view v) { raw('"' + json_escape(v) + '"'); }
  void value(const char* v) { value(std::string_view{v}); }
  void null() { raw("null"); }

  template <typename Range>
  void number_array(const Range& values) {
    begin_array();
    for (const auto& v : values) value(v);
    end_array();
  }

 private:
  void comma() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
  }
  void open(char ch) {
    comma();
    out_ += ch;
    need_comma_ = false;
    pending_value_ = false;
  }
  void close(char ch) {
    out_ += ch;
    need_comma_ = true;
  }
  void raw(std::string_view text) {
    if (!pending_value_) comma();
    pending_value_ = false;
    out_ += text;
    need_comma_ = true;
  }

  std::string out_;
  bool need_comma_ = false;
  bool pending_value_ = false;
};

void write_config(JsonWriter& w, const SamplerConfig& cfg) {
  w.key("config");
  w.begin_object();
  w.key("seed");
  w.value(cfg.seed);
  w.key("samples");
  w.value(cfg.n_samples);
  w.key("weight_log_std");
  w.value(cfg.weight_log_std);
  w.key("shape_mode");
  w.value(to_string(cfg.shape_mode));
  w.key("eps_interior");
  w.value(cfg.eps_interior);
  w.key("tolerance_rel");
  w.value(cfg.tolerance_rel);
  w.end_object();
}

void write_argmin(JsonWriter& w, const ArgminRecord& rec) {
  w.begin_object();
  w.key("sample_index");
  w.value(rec.sample_index);
  w.key("rel_slack");
  w.value(rec.rel_slack);
  w.key("triangle");
  w.number_array(rec.vertices);
  w.key("barycentric");
  w.number_array(rec.bary);
  w.key("log_weights");
  w.number_array(rec.log_weights);
  w.end_object();
}

void write_header(JsonWriter& w, std::string_view command) {
  w.key("schema_version");
  w.value(kSchemaVersion);
  w.key("command");
  w.value(command);
}

std::string csv_row_config(const ArgminRecord& rec) {
  std::string out;
  for (double v : rec.vertices) out += ',' + format_double(v);
  for (double v : rec.bary) out += ',' + format_double(v);
  for (double v : rec.log_weights) out += ',' + format_double(v);
  return out;
}

constexpr std::string_view kArgminCsvColumns =
    "ax,ay,bx,by,cx,cy,bary_a,bary_b,bary_c,log_x,log_y,log_z,log_u,log_v,log_w";

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string suite_report_json(const SuiteReport& report) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "verify");
  write_config(w, report.config);
  w.key("ids");
  w.begin_array();
  for (const IdRecord& rec : report.records) w.value(info(rec.id).name);
  w.end_array();
  w.key("sampling_errors");
  w.value(report.sampling_errors);
  w.key("results");
  w.begin_array();
  for (const IdRecord& rec : report.records) {
    w.begin_object();
    w.key("id");
    w.value(info(rec.id).name);
    w.key("samples");
    w.value(rec.samples);
    w.key("violations");
    w.value(rec.violations);
    w.key("min_rel_slack");
    w.value(rec.min_rel_slack);
    w.key("argmin");
    if (rec.argmin) {
      write_argmin(w, *rec.argmin);
    } else {
      w.null();
    }
    w.key("worst_violation");
    if (const ArgminRecord* worst = rec.worst_violation(report.config.tolerance_rel)) {
      write_argmin(w, *worst);
    } else {
      w.null();
    }
    w.key("histogram");
    w.number_array(rec.histogram);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string suite_report_csv(const SuiteReport& report) {
  std::string out = "id,samples,violations,min_rel_slack,argmin_sample_index,";
  out += kArgminCsvColumns;
  out += '\n';
  for (const IdRecord& rec : report.records) {
    out += info(rec.id).name;
    out += ',' + std::to_string(rec.samples);
    out += ',' + std::to_string(rec.violations);
    out += ',' + format_double(rec.min_rel_slack);
    if (rec.argmin) {
      out += ',' + std::to_string(rec.argmin->sample_index);
      out += csv_row_config(*rec.argmin);
    } else {
      for (int i = 0; i < 16; ++i) out += ',';
    }
    out += '\n';
  }
  return out;
}

std::string identity_report_json(const IdentityReport& report) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "identities");
  write_config(w, report.config);
  w.key("identities");
  w.begin_array();
  for (const IdentityRecord& rec : report.records) {
    w.begin_object();
    w.key("name");
    w.value(rec.name);
    w.key("samples");
    w.value(rec.samples);
    w.key("max_rel_diff");
    w.value(rec.max_rel_diff);
    w.key("tolerance");
    w.value(rec.tolerance);
    w.key("pass");
    w.value(rec.pass);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string identity_report_csv(const IdentityReport& report) {
  std::string out = "name,samples,max_rel_diff,tolerance,pass\n";
  for (const IdentityRecord& rec : report.records) {
    out += rec.name;
    out += ',' + std::to_string(rec.samples);
    out += ',' + format_double(rec.max_rel_diff);
    out += ',' + format_double(rec.tolerance);
    out += rec.pass ? ",1\n" : ",0\n";
  }
  return out;
}

std::string tightness_report_json(const SamplerConfig& cfg, int max_iter,
                                  const std::vector<TightnessResult>& results,
                                  const std::vector<EqualityReport>& equality) {
  JsonWriter w;
  w.begin_object();
  write_header(w, "tighten");
  write_config(w, cfg);
  w.key("max_iter");
  w.value(max_iter);
  w.key("tightness");
  w.begin_array();
  for (const TightnessResult& r : results) {
    const DecodedConfig config = r.argmin();
    w.begin_object();
    w.key("id");
    w.value(info(r.id).name);
    w.key("min_slack");
    w.value(r.min_slack);
    w.key("starts");
    w.value(r.starts);
    w.key("converged_starts");
    w.value(r.converged_starts);
    w.key("distance_to_canonical");
    w.value(r.distance);
    w.key("argmin");
    w.begin_object();
    w.key("triangle");
    w.number_array(std::array<double, 6>{config.tri.A().x, config.tri.A().y,
                                         config.tri.B().x, config.tri.B().y,
                                         config.tri.C().x, config.tri.C().y});
    w.key("barycentric");
    w.number_array(std::array<double, 3>{config.bary.lambda_a(),
                                         config.bary.lambda_b(),
                                         config.bary.lambda_c()});
    w.key("log_weights");
    w.number_array(config.weights.logs());
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.key("equality");
  w.begin_array();
  for (const EqualityReport& r : equality) {
    w.begin_object();
    w.key("id");
    w.value(info(r.id).name);
    w.key("slack_at_canonical");
    w.value(r.slack_at_canonical);
    w.key("n_probes");
    w.value(r.n_probes);
    w.key("min_probe_slack");
    w.value(r.min_probe_slack);
    w.key("max_probe_slack");
    w.value(r.max_probe_slack);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string tightness_report_csv(const std::vector<TightnessResult>& results) {
  std::string out =
      "id,min_slack,starts,converged_starts,distance_to_canonical\n";
  for (const TightnessResult& r : results) {
    out += info(r.id).name;
    out += ',' + format_double(r.min_slack);
    out += ',' + std::to_string(r.starts);
    out += ',' + std::to_string(r.converged_starts);
    out += ',' + format_double(r.distance);
    out += '\n';
  }
  return out;
}

std::string catalog_json() {
  JsonWriter w;
  w.begin_object();
  write_header(w, "catalog");
  w.key("entries");
  w.begin_array();
  for (const InequalityInfo& entry : catalog()) {
    w.begin_object();
    w.key("id");
    w.value(entry.name);
    w.key("lhs");
    w.value(entry.lhs);
    w.key("rhs");
    w.value(entry.rhs);
    w.key("reference");
    w.value(entry.reference);
    w.key("weights");
    w.value(arity_name(entry.arity));
    w.key("note");
    if (entry.note.empty()) {
      w.null();
    } else {
      w.value(entry.note);
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

}  // namespace emlab
