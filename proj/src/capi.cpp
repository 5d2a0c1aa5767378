#include "dehn/dehnkit.h"

#include <cstring>
#include <sstream>
#include <string>

#include "dehn/chain.hpp"
#include "dehn/complex2.hpp"
#include "dehn/diagram.hpp"
#include "dehn/growth.hpp"
#include "dehn/plmaps.hpp"
#include "dehn/presentation.hpp"
#include "dehn/pushing.hpp"
#include "json.hpp"

using nlohmann::json;

struct dk_presentation {
  dehn::presentation::Presentation value;
};
struct dk_complex {
  dehn::complex2::Complex2 value;
};
struct dk_diagram {
  dehn::diagram::VanKampenDiagram value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
dk_status guarded(F&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DK_ERR_INVALID;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return DK_ERR_PARSE;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return DK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DK_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* dk_last_error(void) { return g_last_error.c_str(); }

void dk_string_free(char* s) { std::free(s); }

dk_status dk_presentation_parse(const char* text, dk_presentation** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    auto p = new dk_presentation{dehn::presentation::parse_presentation(text)};
    *out = p;
    return DK_OK;
  });
}

void dk_presentation_free(dk_presentation* p) { delete p; }

dk_status dk_presentation_serialize(const dk_presentation* p, char** out) {
  if (!p || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = dup_string(dehn::presentation::serialize_presentation(p->value));
    return DK_OK;
  });
}

dk_status dk_area(const dk_presentation* p, const char* word, int64_t max_area,
                  int64_t max_word_length, char** out_json) {
  if (!p || !word || !out_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    namespace pres = dehn::presentation;
    pres::SearchLimits limits;
    if (max_area > 0) limits.max_area = max_area;
    if (max_word_length > 0) limits.max_word_length = max_word_length;
    pres::Word w = pres::parse_word(word, p->value);
    pres::AreaResult res = pres::combinatorial_area(w, p->value, limits);
    json j;
    switch (res.status) {
      case pres::AreaResult::Status::Exact:
        j["status"] = "exact";
        break;
      case pres::AreaResult::Status::LowerBound:
        j["status"] = "lower_bound";
        break;
      case pres::AreaResult::Status::NotNullhomotopic:
        j["status"] = "not_nullhomotopic";
        break;
      default:
        j["status"] = "unknown";
        break;
    }
    j["area"] = res.area;
    j["lower_bound"] = res.lower_bound;
    j["certified"] = res.globally_certified;
    j["nodes_expanded"] = res.stats.nodes_expanded;
    j["max_word_length_reached"] = res.stats.max_word_length_reached;
    *out_json = dup_string(j.dump(2) + "\n");
    if (res.status == pres::AreaResult::Status::LowerBound ||
        res.status == pres::AreaResult::Status::Unknown)
      return DK_ERR_LIMIT;
    return DK_OK;
  });
}

dk_status dk_dehn_table(const dk_presentation* p, int64_t n_max, int64_t max_area,
                        int64_t max_word_length, char** out_csv) {
  if (!p || !out_csv) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    namespace pres = dehn::presentation;
    pres::SearchLimits limits;
    if (max_area > 0) limits.max_area = max_area;
    if (max_word_length > 0) limits.max_word_length = max_word_length;
    pres::DehnTable t = pres::dehn_function(p->value, n_max, limits, true);
    *out_csv = dup_string(dehn::growth::table_to_csv(t.table));
    if (!t.all_exact()) {
      g_last_error = "some table entries were not certified exact";
      return DK_ERR_LIMIT;
    }
    return DK_OK;
  });
}

dk_status dk_classify_table(const char* csv, int max_exp, char** out_json) {
  if (!csv || !out_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    namespace growth = dehn::growth;
    growth::GrowthTable t = growth::table_from_csv(csv);
    growth::GridSpec grid;
    if (max_exp >= 0) grid.max_exp = max_exp;
    struct Ref {
      const char* name;
      growth::SymbolicGrowth g;
    };
    std::vector<Ref> refs;
    refs.push_back({"0", growth::SymbolicGrowth::zero()});
    refs.push_back({"1", growth::SymbolicGrowth::polynomial(1, 0)});
    refs.push_back({"n", growth::SymbolicGrowth::polynomial(1, 1)});
    refs.push_back({"n^2", growth::SymbolicGrowth::polynomial(1, 2)});
    refs.push_back({"n^3", growth::SymbolicGrowth::polynomial(1, 3)});
    refs.push_back({"2^n", growth::SymbolicGrowth::exponential(2)});
    json rows = json::array();
    std::string equivalent_to;
    for (const Ref& ref : refs) {
      growth::GrowthTable rt = growth::table_of(ref.g, t.lo, t.hi());
      auto fwd = growth::find_witness(t, rt, grid);
      auto bwd = growth::find_witness(rt, t, grid);
      json row;
      row["reference"] = ref.name;
      row["table_below_reference"] = fwd.has_value();
      row["reference_below_table"] = bwd.has_value();
      if (fwd) row["forward_witness"] = fwd->describe();
      if (bwd) row["backward_witness"] = bwd->describe();
      if (fwd && bwd && equivalent_to.empty()) equivalent_to = ref.name;
      rows.push_back(row);
    }
    json j;
    j["rows"] = rows;
    j["equivalent_to"] = equivalent_to;  // empty: no match on the scale
    *out_json = dup_string(j.dump(2) + "\n");
    return DK_OK;
  });
}

dk_status dk_complex_parse(const char* text, dk_complex** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = new dk_complex{dehn::complex2::parse_complex(text)};
    return DK_OK;
  });
}

dk_status dk_complex_standard(const char* name, int size, dk_complex** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = new dk_complex{dehn::complex2::standard_model(name, size)};
    return DK_OK;
  });
}

dk_status dk_complex_from_presentation(const dk_presentation* p, dk_complex** out) {
  if (!p || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = new dk_complex{dehn::complex2::presentation_complex(p->value)};
    return DK_OK;
  });
}

dk_status dk_complex_triangulate(const dk_complex* c, dk_complex** out) {
  if (!c || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = new dk_complex{dehn::complex2::triangulate(c->value).complex};
    return DK_OK;
  });
}

dk_status dk_complex_serialize(const dk_complex* c, char** out) {
  if (!c || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = dup_string(dehn::complex2::serialize_complex(c->value));
    return DK_OK;
  });
}

void dk_complex_free(dk_complex* c) { delete c; }

dk_status dk_diagram_parse(const char* json_text, dk_diagram** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = new dk_diagram{dehn::diagram::diagram_from_json(json_text)};
    return DK_OK;
  });
}

dk_status dk_diagram_serialize(const dk_diagram* d, char** out) {
  if (!d || !out) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    *out = dup_string(dehn::diagram::diagram_to_json(d->value));
    return DK_OK;
  });
}

void dk_diagram_free(dk_diagram* d) { delete d; }

dk_status dk_diagram_collapse(const dk_diagram* d, dk_diagram** out_diagram,
                              char** out_report_json) {
  if (!d || !out_diagram || !out_report_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    dehn::diagram::CollapseReport rep = dehn::diagram::collapse(d->value);
    json j;
    j["excised_sphere_count"] = rep.excised_sphere_count;
    j["area_before"] = rep.area_before;
    j["area_after"] = rep.area_after;
    *out_report_json = dup_string(j.dump(2) + "\n");
    *out_diagram = new dk_diagram{std::move(rep.output)};
    return DK_OK;
  });
}

dk_status dk_enumerate_area(const dk_complex* c, const int* boundary_darts, size_t len,
                            int64_t max_cells, int* found, int64_t* out_area) {
  if (!c || (!boundary_darts && len > 0) || !found || !out_area) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    std::vector<int> w(boundary_darts, boundary_darts + len);
    auto res = dehn::diagram::enumerate_area_oracle(w, c->value, max_cells);
    *found = res.has_value() ? 1 : 0;
    *out_area = res.value_or(0);
    return DK_OK;
  });
}

dk_status dk_push(const dk_complex* c, const char* chain_json, double r, uint64_t seed,
                  char** out_r_json, char** out_s_json, char** out_cert_json) {
  if (!c || !chain_json || !out_r_json || !out_s_json || !out_cert_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    auto pc = dehn::pushing::pushing_constants(1, 2, r > 0 ? r : 0.12);
    std::string kind = dehn::chain::chain_kind_of_json(chain_json);
    if (kind == "loop") {
      auto loop = dehn::chain::loop_from_json(chain_json);
      auto res = dehn::pushing::push_loop(loop, c->value, pc, seed);
      *out_r_json = dup_string(dehn::chain::loop_to_json(res.loop));
      *out_s_json = dup_string(dehn::chain::chain2_to_json(res.S));
      *out_cert_json = dup_string(dehn::pushing::certificate_to_json(res.certificate));
    } else {
      auto t = dehn::chain::chain1_from_json(chain_json);
      auto res = dehn::pushing::push_chain(t, c->value, pc, seed);
      *out_r_json = dup_string(dehn::chain::chain1_to_json(res.R));
      *out_s_json = dup_string(dehn::chain::chain2_to_json(res.S));
      *out_cert_json = dup_string(dehn::pushing::certificate_to_json(res.certificate));
    }
    return DK_OK;
  });
}

dk_status dk_alpha(const char* chain_json, double v, int samples, double r, uint64_t seed,
                   char** out_json) {
  if (!chain_json || !out_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    auto q = dehn::chain::chain1_from_json(chain_json);
    for (const auto& s : q.segs)
      if (s.face != q.segs.front().face) {
        g_last_error = "alpha estimation works inside a single simplex";
        return DK_ERR_INVALID;
      }
    auto pc = dehn::pushing::pushing_constants(1, 2, r > 0 ? r : 0.12);
    dehn::Rng rng(seed);
    auto est = dehn::pushing::estimate_alpha(q, v, samples, pc, rng);
    json j;
    j["v"] = v;
    j["alpha"] = est.alpha;
    j["ci_lo"] = est.lo;
    j["ci_hi"] = est.hi;
    j["samples"] = est.samples;
    j["hits"] = est.hits;
    j["K"] = pc.K;
    j["alpha_times_v"] = est.alpha * v;
    j["ci_hi_times_v"] = est.hi * v;
    *out_json = dup_string(j.dump(2) + "\n");
    return DK_OK;
  });
}

dk_status dk_straighten(const dk_complex* c, const char* loop_json, uint64_t seed,
                        char** out_loop_json, char** out_cert_json) {
  if (!c || !loop_json || !out_loop_json || !out_cert_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    auto loop = dehn::chain::loop_from_json(loop_json);
    auto res = dehn::plmaps::combinatorialize(loop, c->value, seed);
    json j;
    j["darts"] = res.loop.darts;
    *out_loop_json = dup_string(j.dump(2) + "\n");
    *out_cert_json = dup_string(dehn::plmaps::straighten_certificate_to_json(res.certificate));
    return DK_OK;
  });
}

dk_status dk_degree(const char* discmap_json, uint64_t seed, char** out_report_json) {
  if (!discmap_json || !out_report_json) {
    g_last_error = "null argument";
    return DK_ERR_INVALID;
  }
  return guarded([&] {
    auto f = dehn::plmaps::discmap_from_json(discmap_json);
    auto rep = dehn::plmaps::component_degrees(f, seed);
    *out_report_json = dup_string(dehn::plmaps::degree_report_to_json(rep));
    return DK_OK;
  });
}

}  // extern "C"
