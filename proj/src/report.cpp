#include "polylog/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "polylog/continuation.hpp"

namespace polylog {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::reflection: return "reflection";
    case Method::landen: return "landen";
    case Method::inversion: return "inversion";
    case Method::integral: return "integral";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// Non-finite residuals have no JSON literal; they become null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string format_eval(std::string_view function, const EvalResult& r, Format f) {
  switch (f) {
    case Format::json: {
      json j = {{"function", function},
                {"value", complex_json(r.value)},
                {"err_estimate", r.err_estimate},
                {"terms_or_evals", r.terms_or_evals},
                {"method", to_string(r.method)}};
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return "function,re,im,err_estimate,terms_or_evals,method\n" + std::string(function) + "," +
             g17(r.value.real()) + "," + g17(r.value.imag()) + "," + g17(r.err_estimate) + "," +
             std::to_string(r.terms_or_evals) + "," + std::string(to_string(r.method)) + "\n";
    case Format::text:
      break;
  }
  std::ostringstream os;
  os << "value          " << format_complex(r.value) << "\n"
     << "err_estimate   " << g3(r.err_estimate) << "\n"
     << "terms_or_evals " << r.terms_or_evals << "\n"
     << "method         " << to_string(r.method) << "\n";
  return os.str();
}

std::string format_report(const std::vector<ReportRow>& rows, Format f) {
  if (f == Format::json) {
    json arr = json::array();
    for (const ReportRow& r : rows) {
      arr.push_back({{"identity_id", r.identity_id},
                     {"n_points", r.n_points},
                     {"max_residual", number_or_null(r.max_residual)},
                     {"tol", r.tol},
                     {"pass", r.pass},
                     {"expected_fail", r.expected_fail},
                     {"notes", r.notes}});
    }
    return arr.dump(2) + "\n";
  }
  if (f == Format::csv) {
    std::string out = "identity_id,n_points,max_residual,tol,pass,expected_fail,notes\n";
    for (const ReportRow& r : rows) {
      out += r.identity_id + "," + std::to_string(r.n_points) + "," + g17(r.max_residual) + "," +
             g17(r.tol) + "," + (r.pass ? "true" : "false") + "," + (r.expected_fail ? "true" : "false") +
             "," + csv_quote(r.notes) + "\n";
    }
    return out;
  }
  std::size_t w = 12;
  for (const ReportRow& r : rows) w = std::max(w, r.identity_id.size() + 2);
  std::ostringstream os;
  os << pad("identity", w) << pad("points", 8) << pad("max_residual", 14) << pad("tol", 10) << "status\n";
  int failures = 0;
  for (const ReportRow& r : rows) {
    std::string status = r.pass ? "pass" : "FAIL";
    if (r.expected_fail) status = r.pass ? "pass (expected fail)" : "xfail";
    if (!r.pass && !r.expected_fail) ++failures;
    os << pad(r.identity_id, w) << pad(std::to_string(r.n_points), 8) << pad(g3(r.max_residual), 14)
       << pad(g3(r.tol), 10) << status << "\n";
    if (!r.notes.empty() && (!r.pass || r.expected_fail)) os << "    " << r.notes << "\n";
  }
  os << rows.size() << " rows, " << failures << " unexpected failures\n";
  return os.str();
}

std::string format_constants(const std::vector<ConstantEntry>& entries, Format f) {
  struct Line {
    const ConstantEntry* e;
    Complex computed;
    double residual;
  };
  std::vector<Line> lines;
  for (const ConstantEntry& e : entries) {
    const Complex c = e.evaluate().value;
    lines.push_back({&e, c, std::abs(c - e.value)});
  }
  if (f == Format::json) {
    json arr = json::array();
    for (const Line& l : lines) {
      arr.push_back({{"name", l.e->name},
                     {"closed_form", l.e->closed_form},
                     {"value", complex_json(l.e->value)},
                     {"computed", complex_json(l.computed)},
                     {"residual", l.residual},
                     {"anchor", l.e->anchor}});
    }
    return arr.dump(2) + "\n";
  }
  if (f == Format::csv) {
    std::string out = "name,closed_form,re,im,computed_re,computed_im,residual,anchor\n";
    for (const Line& l : lines) {
      out += csv_quote(l.e->name) + "," + csv_quote(l.e->closed_form) + "," + g17(l.e->value.real()) + "," +
             g17(l.e->value.imag()) + "," + g17(l.computed.real()) + "," + g17(l.computed.imag()) + "," +
             g17(l.residual) + "," + csv_quote(l.e->anchor) + "\n";
    }
    return out;
  }
  std::ostringstream os;
  for (const Line& l : lines) {
    os << pad(l.e->name, 30) << pad(l.e->closed_form, 44) << format_complex(l.e->value)
       << "  residual " << g3(l.residual) << "\n"
       << "    " << l.e->anchor << "\n";
  }
  return os.str();
}

std::string format_d2(double d2, const std::vector<D2Relation>& ledger, Format f) {
  struct Line {
    const D2Relation* r;
    Complex predicted, computed;
    double residual;
  };
  std::vector<Line> lines;
  for (const D2Relation& r : ledger) {
    const Complex p = r.predicted(d2);
    const Complex c = li2(r.target).value;
    lines.push_back({&r, p, c, std::abs(p - c)});
  }
  if (f == Format::json) {
    json arr = json::array();
    for (const Line& l : lines) {
      arr.push_back({{"label", l.r->label},
                     {"target", complex_json(l.r->target)},
                     {"alpha", l.r->alpha},
                     {"beta", l.r->beta},
                     {"gamma", l.r->gamma},
                     {"predicted", complex_json(l.predicted)},
                     {"computed", complex_json(l.computed)},
                     {"residual", l.residual},
                     {"derivation", l.r->derivation}});
    }
    return json{{"d2", d2}, {"relations", arr}}.dump(2) + "\n";
  }
  if (f == Format::csv) {
    std::string out = "label,alpha,beta,gamma,predicted_re,predicted_im,computed_re,computed_im,residual\n";
    out += "d2,,,," + g17(d2) + ",0,,,\n";
    for (const Line& l : lines) {
      out += csv_quote(l.r->label) + "," + g17(l.r->alpha) + "," + g17(l.r->beta) + "," + g17(l.r->gamma) +
             "," + g17(l.predicted.real()) + "," + g17(l.predicted.imag()) + "," + g17(l.computed.real()) +
             "," + g17(l.computed.imag()) + "," + g17(l.residual) + "\n";
    }
    return out;
  }
  std::ostringstream os;
  os << "d2 = Li2(-1/2) = " << g17(d2) << "\n";
  for (const Line& l : lines) {
    os << pad(l.r->label, 10) << "alpha " << pad(g17(l.r->alpha), 4) << pad(format_complex(l.predicted), 46)
       << "li2 " << pad(format_complex(l.computed), 46) << "residual " << g3(l.residual) << "\n";
  }
  return os.str();
}

}  // namespace polylog
