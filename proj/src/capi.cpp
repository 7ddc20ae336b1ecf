#include "fknc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fk/json_io.hpp"
#include "fk/noncrossing.hpp"
#include "fk/orlik_terao.hpp"
#include "fk/rewrite.hpp"
#include "fk/verify.hpp"

struct fknc_graph {
  fk::Graph value;
};

struct fknc_element {
  fk::TreeElement value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
fknc_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const fk::parse_error& e) {
    g_last_error = e.what();
    return FKNC_ERROR_PARSE;
  } catch (const fk::limit_error& e) {
    g_last_error = e.what();
    return FKNC_ERROR_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FKNC_ERROR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FKNC_ERROR_INVALID;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return FKNC_ERROR_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FKNC_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FKNC_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* fknc_version(void) { return "1.0.0"; }

const char* fknc_last_error(void) { return g_last_error.c_str(); }

void fknc_string_free(char* s) { ::free(s); }

fknc_status fknc_graph_parse(const char* json, fknc_graph** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new fknc_graph{fk::graph_from_json(json)};
    return FKNC_OK;
  });
}

fknc_status fknc_graph_complete(int n, fknc_graph** out) {
  if (!out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    *out = new fknc_graph{fk::Graph::complete(n)};
    return FKNC_OK;
  });
}

void fknc_graph_free(fknc_graph* g) { delete g; }

fknc_status fknc_graph_to_json(const fknc_graph* g, char** json_out) {
  if (!g || !json_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    *json_out = dup_string(fk::graph_to_json(g->value));
    return FKNC_OK;
  });
}

int fknc_graph_vertex_count(const fknc_graph* g) { return g ? g->value.n() : 0; }

fknc_status fknc_trees_jsonl(const fknc_graph* g, int reduced_only, int with_signatures,
                             char** jsonl_out) {
  if (!g || !jsonl_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    std::string out;
    auto emit = [&](const fk::NoncrossingTree& t) {
      out += fk::tree_to_json(t, with_signatures != 0);
      out += "\n";
      return true;
    };
    if (reduced_only)
      fk::enumerate_g_reduced(g->value, emit);
    else {
      const fk::EdgeTable& tab = fk::EdgeTable::get(g->value.n());
      uint64_t gmask = tab.mask_of(g->value.edges());
      fk::enumerate_noncrossing_trees(g->value.n(), [&](const fk::NoncrossingTree& t) {
        if ((t.mask() & ~gmask) == 0) emit(t);
        return true;
      });
    }
    *jsonl_out = dup_string(out);
    return FKNC_OK;
  });
}

fknc_status fknc_element_parse(const char* json, fknc_element** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new fknc_element{fk::element_from_json(json)};
    return FKNC_OK;
  });
}

void fknc_element_free(fknc_element* e) { delete e; }

fknc_status fknc_element_to_json(const fknc_element* e, int pretty, char** json_out) {
  if (!e || !json_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    *json_out = dup_string(fk::element_to_json(e->value, pretty != 0));
    return FKNC_OK;
  });
}

fknc_status fknc_element_reduce(const fknc_element* e, const fknc_graph* g, const char* strategy,
                                uint64_t seed, fknc_element** out) {
  if (!e || !g || !strategy || !out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    fk::ReduceStrategy strat;
    std::string name = strategy;
    if (name == "lex")
      strat = fk::ReduceStrategy::lex();
    else if (name == "random")
      strat = fk::ReduceStrategy::random(seed);
    else
      throw std::invalid_argument("strategy must be \"lex\" or \"random\"");
    *out = new fknc_element{fk::reduce(e->value, g->value, strat)};
    return FKNC_OK;
  });
}

fknc_status fknc_monomial_normalize(const char* json, char** json_out) {
  if (!json || !json_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    *json_out = dup_string(fk::monomial_to_json(fk::monomial_from_json(json)));
    return FKNC_OK;
  });
}

fknc_status fknc_element_abelianize(const fknc_element* e, const fknc_graph* g, char** json_out) {
  if (!e || !g || !json_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    *json_out = dup_string(fk::ot_element_to_json(fk::abelianize(e->value, g->value)));
    return FKNC_OK;
  });
}

fknc_status fknc_basis_dimension(const fknc_graph* g, int64_t* dim_out) {
  if (!g || !dim_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    *dim_out = fk::basis_dimension(g->value);
    return FKNC_OK;
  });
}

fknc_status fknc_hilbert_json(const fknc_graph* g, char** json_out) {
  if (!g || !json_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  return guarded([&] {
    fk::Polynomial chi = fk::chromatic_polynomial(g->value);
    fk::Polynomial hilbert = fk::ot_hilbert_series(g->value);  // dual-route check inside
    auto counts = fk::nbc_counts_by_size(g->value, fk::EdgeOrder::lex(g->value));
    std::string out = "{\"chromatic\":[";
    for (int k = 0; k <= g->value.n(); ++k) {
      if (k) out += ",";
      out += chi.coeff(k).to_string();
    }
    out += "],\"hilbert\":[";
    for (int k = 0; k <= hilbert.degree(); ++k) {
      if (k) out += ",";
      out += hilbert.coeff(k).to_string();
    }
    out += "],\"nbc_counts\":[";
    for (size_t k = 0; k < counts.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(counts[k]);
    }
    out += "]}";
    *json_out = dup_string(out);
    return FKNC_OK;
  });
}

fknc_status fknc_verify(const char* suite, int n, uint64_t seed, char** report_out) {
  if (!suite || !report_out) {
    g_last_error = "null argument";
    return FKNC_ERROR_INVALID;
  }
  *report_out = nullptr;
  fknc_status status = guarded([&] {
    std::string name = suite;
    int size = n > 0 ? n : fk::default_suite_size(name);
    fk::SuiteReport report = fk::run_suite(name, size, seed);
    *report_out = dup_string(report.to_jsonl());
    return report.pass() ? FKNC_OK : FKNC_ERROR_VERIFY;
  });
  return status;
}

}  // extern "C"
