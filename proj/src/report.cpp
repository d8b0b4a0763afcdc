#include "umbra/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "umbra/format.hpp"

namespace umbra {

namespace {

void json_escape_into(std::ostringstream& os, const std::string& s) {
  os << '"';
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  os << '"';
}

// Finite doubles as %.17g numbers, anything else as null.
void json_number_into(std::ostringstream& os, double v) {
  if (std::isfinite(v)) {
    os << fmt_g17(v);
  } else {
    os << "null";
  }
}

void json_pairs_into(std::ostringstream& os,
                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  os << '{';
  bool first = true;
  for (const auto& [k, v] : pairs) {
    if (!first) os << ',';
    first = false;
    json_escape_into(os, k);
    os << ':';
    json_escape_into(os, v);
  }
  os << '}';
}

std::string pack_inputs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string s;
  for (const auto& [k, v] : pairs) {
    if (!s.empty()) s += ';';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string lookup(const std::vector<std::pair<std::string, std::string>>& pairs,
                   const char* key) {
  for (const auto& [k, v] : pairs)
    if (k == key) return v;
  return {};
}

}  // namespace

Summary summarize_records(const std::vector<VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.total;
    if (r.pass) ++s.pass;
    else ++s.fail;
  }
  return s;
}

Summary summarize_rows(const std::vector<EvalRow>& rows) {
  Summary s;
  for (const auto& r : rows) {
    ++s.total;
    if (r.error.empty()) ++s.pass;
    else ++s.fail;
  }
  return s;
}

std::string to_json(const ReportDocument& doc) {
  std::ostringstream os;
  os << "{\"version\":";
  json_escape_into(os, doc.tool_version);
  os << ",\"config\":";
  json_pairs_into(os, doc.config_echo);
  os << ",\"records\":[";
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    const auto& r = doc.records[i];
    if (i) os << ',';
    os << "{\"identity_id\":";
    json_escape_into(os, r.identity_id);
    os << ",\"inputs\":";
    json_pairs_into(os, r.inputs);
    os << ",\"closed_form\":";
    json_number_into(os, r.closed_form);
    os << ",\"oracle\":";
    json_number_into(os, r.oracle);
    os << ",\"oracle_kind\":";
    json_escape_into(os, oracle_kind_name(r.oracle_kind));
    os << ",\"abs_err\":";
    json_number_into(os, r.abs_err);
    os << ",\"rel_err\":";
    json_number_into(os, r.rel_err);
    os << ",\"tol\":";
    json_number_into(os, r.tol);
    os << ",\"mc_std_err\":";
    if (r.oracle_kind == OracleKind::MonteCarlo) json_number_into(os, r.mc_std_err);
    else os << "null";
    os << ",\"pass\":" << (r.pass ? "true" : "false") << '}';
  }
  os << "],\"rows\":[";
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& r = doc.rows[i];
    if (i) os << ',';
    os << "{\"inputs\":";
    json_pairs_into(os, r.inputs);
    os << ",\"value\":";
    if (r.has_value) json_number_into(os, r.value);
    else os << "null";
    if (!r.branch.empty()) {
      os << ",\"branch\":";
      json_escape_into(os, r.branch);
    }
    if (r.has_oracle) {
      os << ",\"oracle\":";
      json_number_into(os, r.oracle);
      os << ",\"abs_err\":";
      json_number_into(os, r.abs_err);
    }
    if (!r.error.empty()) {
      os << ",\"error\":";
      json_escape_into(os, r.error);
    }
    os << '}';
  }
  os << "],\"summary\":{\"pass\":" << doc.summary.pass << ",\"fail\":" << doc.summary.fail
     << ",\"total\":" << doc.summary.total << "}}";
  os << '\n';
  return os.str();
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream os;
  if (!doc.records.empty() || doc.rows.empty()) {
    os << "identity_id,inputs,closed_form,oracle,oracle_kind,abs_err,rel_err,tol,"
          "mc_std_err,pass\n";
    for (const auto& r : doc.records) {
      os << csv_field(r.identity_id) << ',' << csv_field(pack_inputs(r.inputs)) << ','
         << fmt_g17(r.closed_form) << ',' << fmt_g17(r.oracle) << ','
         << oracle_kind_name(r.oracle_kind) << ',' << fmt_g17(r.abs_err) << ','
         << fmt_g17(r.rel_err) << ',' << fmt_g17(r.tol) << ','
         << (r.oracle_kind == OracleKind::MonteCarlo ? fmt_g17(r.mc_std_err) : "")
         << ',' << (r.pass ? "true" : "false") << '\n';
    }
  }
  if (!doc.rows.empty()) {
    os << "func,umbra,x,k,n,index,value,branch,oracle,abs_err,error\n";
    for (const auto& r : doc.rows) {
      os << csv_field(lookup(r.inputs, "func")) << ',' << csv_field(lookup(r.inputs, "umbra"))
         << ',' << lookup(r.inputs, "x") << ',' << lookup(r.inputs, "k") << ','
         << lookup(r.inputs, "n") << ',' << lookup(r.inputs, "index") << ','
         << (r.has_value ? fmt_g17(r.value) : "") << ',' << r.branch << ','
         << (r.has_oracle ? fmt_g17(r.oracle) : "") << ','
         << (r.has_oracle ? fmt_g17(r.abs_err) : "") << ',' << csv_field(r.error)
         << '\n';
    }
  }
  return os.str();
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "umbra " << doc.tool_version << '\n';
  for (const auto& [k, v] : doc.config_echo) os << "  " << k << " = " << v << '\n';
  for (const auto& r : doc.records) {
    os << (r.pass ? "PASS " : "FAIL ") << r.identity_id;
    const std::string in = pack_inputs(r.inputs);
    if (!in.empty()) os << " [" << in << ']';
    os << " closed=" << fmt_g17(r.closed_form) << " oracle=" << fmt_g17(r.oracle)
       << " (" << oracle_kind_name(r.oracle_kind) << ") abs_err=" << fmt_g17(r.abs_err);
    if (r.oracle_kind == OracleKind::MonteCarlo)
      os << " std_err=" << fmt_g17(r.mc_std_err);
    os << '\n';
  }
  for (const auto& r : doc.rows) {
    os << pack_inputs(r.inputs) << " -> ";
    if (!r.error.empty()) {
      os << "error: " << r.error;
    } else {
      os << fmt_g17(r.value);
      if (!r.branch.empty()) os << " [" << r.branch << ']';
      if (r.has_oracle)
        os << " oracle=" << fmt_g17(r.oracle) << " abs_err=" << fmt_g17(r.abs_err);
    }
    os << '\n';
  }
  os << "summary: pass=" << doc.summary.pass << " fail=" << doc.summary.fail
     << " total=" << doc.summary.total << '\n';
  return os.str();
}

std::string render(const ReportDocument& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::JSON: return to_json(doc);
    case ReportFormat::CSV: return to_csv(doc);
    case ReportFormat::PrettyText: return to_text(doc);
  }
  return {};
}

}  // namespace umbra
