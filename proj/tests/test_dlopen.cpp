// Loads the shared library at runtime and drives it through dlsym-resolved
// entry points, proving the C ABI needs no link-time symbols.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dlfcn.h>

#include <cstdint>
#include <string>

namespace {

struct Lib {
  void* handle = nullptr;
  Lib() { handle = dlopen(FKNC_SHARED_PATH, RTLD_NOW | RTLD_LOCAL); }
  ~Lib() {
    if (handle) dlclose(handle);
  }
  template <typename Fn>
  Fn sym(const char* name) const {
    return reinterpret_cast<Fn>(dlsym(handle, name));
  }
};

}  // namespace

TEST_CASE("the shared library resolves and answers through dlsym") {
  Lib lib;
  REQUIRE(lib.handle != nullptr);

  using graph_complete_t = int (*)(int, void**);
  using graph_free_t = void (*)(void*);
  using basis_dimension_t = int (*)(const void*, int64_t*);
  using verify_t = int (*)(const char*, int, uint64_t, char**);
  using string_free_t = void (*)(char*);
  using version_t = const char* (*)();

  auto graph_complete = lib.sym<graph_complete_t>("fknc_graph_complete");
  auto graph_free = lib.sym<graph_free_t>("fknc_graph_free");
  auto basis_dimension = lib.sym<basis_dimension_t>("fknc_basis_dimension");
  auto verify = lib.sym<verify_t>("fknc_verify");
  auto string_free = lib.sym<string_free_t>("fknc_string_free");
  auto version = lib.sym<version_t>("fknc_version");
  REQUIRE(graph_complete != nullptr);
  REQUIRE(graph_free != nullptr);
  REQUIRE(basis_dimension != nullptr);
  REQUIRE(verify != nullptr);
  REQUIRE(string_free != nullptr);
  REQUIRE(version != nullptr);

  CHECK(std::string(version()).size() > 0);

  void* g = nullptr;
  REQUIRE(graph_complete(5, &g) == 0);
  int64_t dim = 0;
  REQUIRE(basis_dimension(g, &dim) == 0);
  CHECK(dim == 14);
  graph_free(g);

  char* report = nullptr;
  CHECK(verify("catalan", 4, 0, &report) == 0);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("\"pass\":true") != std::string::npos);
  string_free(report);
}
