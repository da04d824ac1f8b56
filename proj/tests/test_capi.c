#include <math.h>
#include <stdio.h>
#include <string.h>

#include <umbilic/umbilic.h>

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void test_surface(void) {
  umb_surface* s = NULL;
  EXPECT(umb_surface_parse("rez3", &s) == UMB_OK);
  EXPECT(s != NULL);
  EXPECT(strcmp(umb_surface_name(s), "rez3") == 0);
  EXPECT(umb_surface_warning_count(s) == 0);
  double j[10];
  EXPECT(umb_jet(s, 1, 0, 2, 0, j) == UMB_OK);
  EXPECT(fabs(j[0] - 1) < 1e-15 && fabs(j[1] - 3) < 1e-15 && fabs(j[3] - 6) < 1e-15 && fabs(j[5] + 6) < 1e-15);
  EXPECT(umb_jet(s, 1, 0, 4, 0, j) == UMB_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(umb_last_error()) > 0);
  umb_surface_free(s);

  umb_surface* w = NULL;
  EXPECT(umb_surface_parse("fm:m=3,a=0.3", &w) == UMB_OK);
  EXPECT(umb_surface_warning_count(w) == 1);
  EXPECT(strlen(umb_surface_warning(w, 0)) > 0);
  EXPECT(strcmp(umb_surface_warning(w, 5), "") == 0);
  EXPECT(umb_jet(w, 0, 0, 2, 0, j) == UMB_ERR_DOMAIN);
  umb_surface_free(w);

  umb_surface* bad = (umb_surface*)0x1;
  EXPECT(umb_surface_parse("nonsense", &bad) == UMB_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strstr(umb_last_error(), "nonsense") != NULL);
  EXPECT(umb_surface_parse(NULL, &bad) == UMB_ERR_INVALID_ARGUMENT);
  umb_surface_free(NULL);
}

static void test_index(void) {
  umb_surface* s = NULL;
  umb_report* r = NULL;
  EXPECT(umb_surface_parse("rez3", &s) == UMB_OK);
  EXPECT(umb_index(s, "circle:0.1", "all", &r) == UMB_OK);
  EXPECT(umb_report_index_count(r) == 3);
  for (size_t i = 0; i < umb_report_index_count(r); ++i) EXPECT(umb_report_twice_index(r, i) == -1);
  EXPECT(strcmp(umb_report_route(r, 0), "D") == 0);
  EXPECT(strstr(umb_report_json(r), "\"twice_index\": -1") != NULL);
  EXPECT(strstr(umb_report_text(r), "-1/2") != NULL);
  EXPECT(umb_report_passed(r) == 1);
  umb_report_free(r);
  r = NULL;
  EXPECT(umb_index(s, "circle:1@1,0", "D", &r) != UMB_OK);
  EXPECT(r == NULL);
  EXPECT(umb_index(s, "bogus", "D", &r) == UMB_ERR_PARSE);
  umb_surface_free(s);
}

static void test_scan_and_export(void) {
  umb_surface* s = NULL;
  umb_report* r = NULL;
  EXPECT(umb_surface_parse("paraboloid", &s) == UMB_OK);
  EXPECT(umb_scan(s, -1, 1, -1, 1, 40, 40, &r) == UMB_OK);
  EXPECT(strstr(umb_report_json(r), "\"candidates\"") != NULL);
  umb_report_free(r);

  umb_export_options o;
  umb_export_options_default(&o);
  o.nx = o.ny = 5;
  EXPECT(umb_export(s, &o, "/nonexistent-dir/f.csv", &r) == UMB_ERR_IO);
  umb_surface_free(s);
}

static void test_duality(void) {
  umb_surface* s = NULL;
  umb_report* r = NULL;
  EXPECT(umb_surface_parse("expr:x^2 - y^2", &s) == UMB_OK);
  EXPECT(umb_duality(s, 10, 0.1, &r) == UMB_OK);
  EXPECT(umb_report_passed(r) == 1);
  umb_report_free(r);
  umb_surface_free(s);
}

int main(void) {
  EXPECT(strlen(umb_version()) > 0);
  EXPECT(strcmp(umb_status_name(UMB_OK), "ok") == 0);
  EXPECT(strlen(umb_status_name(UMB_ERR_IO)) > 0);
  test_surface();
  test_index();
  test_scan_and_export();
  test_duality();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
