#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace endochain::cli {

using nlohmann::json;

output_format parse_format(std::string_view text) {
  if (text == "ascii") return output_format::ascii;
  if (text == "csv") return output_format::csv;
  if (text == "json") return output_format::json;
  if (text == "dot") return output_format::dot;
  raise(errc::bad_format, "unknown format '" + std::string(text) + "'");
}

const char* to_string(output_format f) noexcept {
  switch (f) {
    case output_format::ascii: return "ascii";
    case output_format::csv: return "csv";
    case output_format::json: return "json";
    case output_format::dot: return "dot";
  }
  return "?";
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

json images_json(const endo& x) {
  json arr = json::array();
  for (auto v : x.images()) arr.push_back(static_cast<int>(v));
  return arr;
}

json anchors_json(const string_context& ctx) {
  json arr = json::array();
  for (int a : ctx.anchors()) arr.push_back(a);
  return arr;
}

std::string ascii_grid(const std::string& corner,
                       const std::vector<std::string>& headers,
                       const std::vector<std::string>& row_labels,
                       const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = corner.size();
  for (const auto& h : headers) width = std::max(width, h.size());
  for (const auto& r : row_labels) width = std::max(width, r.size());
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());

  std::ostringstream out;
  auto pad = [&](const std::string& s) {
    out << s << std::string(width - s.size() + 2, ' ');
  };
  pad(corner);
  for (const auto& h : headers) pad(h);
  out << '\n';
  out << std::string((width + 2) * (headers.size() + 1), '-') << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    pad(row_labels[i]);
    for (const auto& c : cells[i]) pad(c);
    out << '\n';
  }
  return out.str();
}

/// Covering edges of the pointwise order on a carrier (bottom-up).
std::vector<std::pair<int, int>> covering_edges(const carrier& c) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j) {
      if (i == j || !leq(c[i], c[j])) continue;
      bool covered = false;
      for (int k = 0; k < c.size() && !covered; ++k)
        covered = k != i && k != j && leq(c[i], c[k]) && leq(c[k], c[j]);
      if (!covered) edges.emplace_back(i, j);
    }
  return edges;
}

}  // namespace

op_table make_op_table(const string_context& ctx, const std::string& op) {
  require(op == "add" || op == "mul", errc::bad_params,
          "op must be 'add' or 'mul', got '" + op + "'");
  const carrier& elems = ctx.elements();
  op_table t;
  t.op = op;
  t.elements.assign(elems.begin(), elems.end());
  for (int i = 0; i < elems.size(); ++i) t.labels.push_back(ctx.label_at(i));
  t.cells.assign(static_cast<std::size_t>(elems.size()),
                 std::vector<int>(static_cast<std::size_t>(elems.size()), -1));
  for (int i = 0; i < elems.size(); ++i)
    for (int j = 0; j < elems.size(); ++j) {
      const endo value = op == "add" ? add(elems[i], elems[j]) : compose(elems[i], elems[j]);
      t.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          *elems.index_of(value);
    }
  return t;
}

std::string render_table(const string_context& ctx, const op_table& table,
                         output_format format) {
  const std::size_t count = table.labels.size();
  switch (format) {
    case output_format::ascii: {
      std::vector<std::vector<std::string>> cells(count);
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
          cells[i].push_back(table.labels[static_cast<std::size_t>(table.cells[i][j])]);
      return ascii_grid(table.op == "add" ? "+" : "*", table.labels, table.labels, cells);
    }
    case output_format::csv: {
      std::ostringstream out;
      out << csv_field(table.op);
      for (const auto& h : table.labels) out << ',' << csv_field(h);
      out << "\r\n";
      for (std::size_t i = 0; i < count; ++i) {
        out << csv_field(table.labels[i]);
        for (std::size_t j = 0; j < count; ++j)
          out << ',' << csv_field(table.labels[static_cast<std::size_t>(table.cells[i][j])]);
        out << "\r\n";
      }
      return out.str();
    }
    case output_format::json: {
      json doc;
      doc["schema"] = 1;
      doc["command"] = "table";
      doc["n"] = ctx.base_chain().size();
      doc["anchors"] = anchors_json(ctx);
      doc["op"] = table.op;
      doc["labels"] = table.labels;
      json elems = json::array();
      for (std::size_t i = 0; i < count; ++i)
        elems.push_back({{"label", table.labels[i]}, {"images", images_json(table.elements[i])}});
      doc["elements"] = std::move(elems);
      json cells = json::array();
      for (std::size_t i = 0; i < count; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < count; ++j)
          row.push_back(table.labels[static_cast<std::size_t>(table.cells[i][j])]);
        cells.push_back(std::move(row));
      }
      doc["cells"] = std::move(cells);
      return doc.dump(2) + "\n";
    }
    case output_format::dot:
      raise(errc::bad_format, "table does not support dot output");
  }
  raise(errc::bad_format, "unhandled format");
}

std::string render_derivations(const string_context& ctx,
                               const semilattice_report& report,
                               output_format format) {
  const carrier& elems = ctx.elements();
  const int d = report.distinct_maps();
  switch (format) {
    case output_format::ascii: {
      std::ostringstream out;
      out << d << " distinct maps\n";
      for (int i = 0; i < d; ++i) {
        const self_map& m = report.representatives[static_cast<std::size_t>(i)];
        out << "  " << m.label() << ":";
        for (int pos = 0; pos < elems.size(); ++pos)
          out << ' ' << ctx.label_at(pos) << "->"
              << ctx.label_of(m.value_at(pos));
        if (report.collapsed[static_cast<std::size_t>(i)].size() > 1) {
          out << "  (=";
          for (const auto& l : report.collapsed[static_cast<std::size_t>(i)]) out << ' ' << l;
          out << ")";
        }
        out << '\n';
      }
      std::vector<std::string> headers;
      for (int i = 0; i < d; ++i)
        headers.push_back(report.representatives[static_cast<std::size_t>(i)].label());
      std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const int v = report.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          cells[static_cast<std::size_t>(i)].push_back(v < 0 ? "-" : headers[static_cast<std::size_t>(v)]);
        }
      out << "composition (row first, then column):\n"
          << ascii_grid(";", headers, headers, cells);
      out << "closed: " << (report.closed ? "yes" : "no")
          << "  commutative: " << (report.commutative ? "yes" : "no")
          << "  idempotent: " << (report.idempotent ? "yes" : "no") << '\n';
      out << "identity: "
          << (report.identity ? headers[static_cast<std::size_t>(*report.identity)] : "none")
          << "  absorbing: "
          << (report.absorbing ? headers[static_cast<std::size_t>(*report.absorbing)] : "none")
          << '\n';
      return out.str();
    }
    case output_format::json: {
      json doc;
      doc["schema"] = 1;
      doc["command"] = "derivations";
      doc["n"] = ctx.base_chain().size();
      doc["anchors"] = anchors_json(ctx);
      json maps = json::array();
      for (int i = 0; i < d; ++i) {
        const self_map& m = report.representatives[static_cast<std::size_t>(i)];
        json action = json::array();
        for (int pos = 0; pos < elems.size(); ++pos)
          action.push_back(ctx.label_of(m.value_at(pos)));
        maps.push_back({{"label", m.label()},
                        {"collapsed", report.collapsed[static_cast<std::size_t>(i)]},
                        {"action", std::move(action)}});
      }
      doc["maps"] = std::move(maps);
      json comp = json::array();
      for (int i = 0; i < d; ++i) {
        json row = json::array();
        for (int j = 0; j < d; ++j) {
          const int v = report.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          row.push_back(v < 0 ? json(nullptr)
                              : json(report.representatives[static_cast<std::size_t>(v)].label()));
        }
        comp.push_back(std::move(row));
      }
      doc["composition"] = std::move(comp);
      doc["closed"] = report.closed;
      doc["commutative"] = report.commutative;
      doc["idempotent"] = report.idempotent;
      doc["identity"] = report.identity
                            ? json(report.representatives[static_cast<std::size_t>(*report.identity)].label())
                            : json(nullptr);
      doc["absorbing"] = report.absorbing
                             ? json(report.representatives[static_cast<std::size_t>(*report.absorbing)].label())
                             : json(nullptr);
      return doc.dump(2) + "\n";
    }
    case output_format::dot: {
      // order x <= y iff x;y == x, drawn bottom-up by covering edges
      auto below = [&](int x, int y) {
        return report.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == x &&
               report.table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == x;
      };
      std::ostringstream out;
      out << "digraph derivations {\n  rankdir=BT;\n";
      for (int i = 0; i < d; ++i)
        out << "  n" << i << " [label=\""
            << report.representatives[static_cast<std::size_t>(i)].label() << "\"];\n";
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j || !below(i, j)) continue;
          bool covered = false;
          for (int k = 0; k < d && !covered; ++k)
            covered = k != i && k != j && below(i, k) && below(k, j);
          if (!covered) out << "  n" << i << " -> n" << j << ";\n";
        }
      out << "}\n";
      return out.str();
    }
    case output_format::csv:
      raise(errc::bad_format, "derivations does not support csv output");
  }
  raise(errc::bad_format, "unhandled format");
}

std::string render_closure(const string_context& ctx, const carrier& over,
                           const carrier& ideal, const std::string& derivation_label,
                           const closure_trace& trace, output_format format) {
  switch (format) {
    case output_format::ascii: {
      std::ostringstream out;
      out << "closure of " << ideal.size() << "-element ideal under "
          << derivation_label << " inside " << over.size() << "-element carrier\n";
      out << "closure:";
      for (const endo& x : trace.closure) out << ' ' << ctx.label_of(x);
      out << "  (" << trace.closure.size() << " of " << over.size() << ")\n";
      for (const orbit_trace& orbit : trace.orbits) {
        out << "  " << ctx.label_of(orbit.start()) << ":";
        for (const endo& step : orbit.steps) out << ' ' << ctx.label_of(step);
        if (orbit.entered_ideal)
          out << "  enters ideal at step " << orbit.entry_step << '\n';
        else
          out << "  cycles outside the ideal\n";
      }
      return out.str();
    }
    case output_format::json: {
      json doc;
      doc["schema"] = 1;
      doc["command"] = "closure";
      doc["n"] = ctx.base_chain().size();
      doc["anchors"] = anchors_json(ctx);
      doc["derivation"] = derivation_label;
      auto labels_of = [&](const carrier& c) {
        json arr = json::array();
        for (const endo& x : c) arr.push_back(ctx.label_of(x));
        return arr;
      };
      doc["carrier"] = labels_of(over);
      doc["ideal"] = labels_of(ideal);
      doc["closure"] = labels_of(trace.closure);
      json orbits = json::array();
      for (const orbit_trace& orbit : trace.orbits) {
        json steps = json::array();
        for (const endo& s : orbit.steps) steps.push_back(ctx.label_of(s));
        orbits.push_back({{"start", ctx.label_of(orbit.start())},
                          {"steps", std::move(steps)},
                          {"entered_ideal", orbit.entered_ideal},
                          {"entry_step", orbit.entry_step}});
      }
      doc["orbits"] = std::move(orbits);
      return doc.dump(2) + "\n";
    }
    case output_format::dot: {
      std::ostringstream out;
      out << "digraph closure {\n  rankdir=BT;\n";
      for (int i = 0; i < over.size(); ++i) {
        out << "  n" << i << " [label=\"" << ctx.label_of(over[i]) << "\"";
        if (trace.closure.contains(over[i])) out << ", style=filled";
        if (ideal.contains(over[i])) out << ", shape=doublecircle";
        out << "];\n";
      }
      for (auto [lo, hi] : covering_edges(over))
        out << "  n" << lo << " -> n" << hi << ";\n";
      out << "}\n";
      return out.str();
    }
    case output_format::csv:
      raise(errc::bad_format, "closure does not support csv output");
  }
  raise(errc::bad_format, "unhandled format");
}

std::string render_verify(const std::vector<verification_result>& results, int n_lo,
                          int n_hi, output_format format) {
  switch (format) {
    case output_format::ascii: {
      std::ostringstream out;
      int pass = 0, fail = 0, info = 0;
      for (const verification_result& r : results) {
        (r.status == verify_status::pass   ? pass
         : r.status == verify_status::fail ? fail
                                           : info)++;
        out << "[" << endochain::to_string(r.status) << "] " << r.claim << " ("
            << r.params << ") " << claim_description(r.claim);
        out << '\n';
        if (r.counterexample) {
          out << "    witness: " << r.counterexample->summary << '\n';
          for (const auto& [key, value] : r.counterexample->fields)
            out << "      " << key << " = " << value << '\n';
        }
        for (const std::string& note : r.notes) out << "    " << note << '\n';
      }
      out << pass << " pass, " << fail << " fail, " << info << " info\n";
      return out.str();
    }
    case output_format::json: {
      json doc;
      doc["schema"] = 1;
      doc["command"] = "verify";
      doc["n_lo"] = n_lo;
      doc["n_hi"] = n_hi;
      json arr = json::array();
      int pass = 0, fail = 0, info = 0;
      for (const verification_result& r : results) {
        (r.status == verify_status::pass   ? pass
         : r.status == verify_status::fail ? fail
                                           : info)++;
        json item;
        item["claim"] = r.claim;
        item["params"] = r.params;
        item["status"] = endochain::to_string(r.status);
        item["elapsed_ms"] = r.elapsed_ms;
        item["notes"] = r.notes;
        if (r.counterexample) {
          json fields = json::array();
          for (const auto& [key, value] : r.counterexample->fields)
            fields.push_back(json::array({key, value}));
          item["witness"] = {{"summary", r.counterexample->summary},
                             {"fields", std::move(fields)}};
        }
        arr.push_back(std::move(item));
      }
      doc["results"] = std::move(arr);
      doc["summary"] = {{"pass", pass}, {"fail", fail}, {"info", info}};
      return doc.dump(2) + "\n";
    }
    default:
      raise(errc::bad_format, "verify supports ascii and json output");
  }
}

}  // namespace endochain::cli
