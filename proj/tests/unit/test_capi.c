/* Exercises the shared library through its C header only. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qwave.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int near(double a, double b, double tol) { return fabs(a - b) <= tol * (1.0 + fabs(b)); }

static void test_model(void) {
  qw_state up = {2.0, 3.0};
  qw_viscosity aniso = {1.0, 0.5}, iso = {1.0, 2.0};
  double W = 0.0, slow, fast;
  qw_shock_kind kind;
  qw_verdict v;
  qw_key_points kp;
  qw_state f;

  EXPECT(qw_flux(up, &f) == QW_OK && f.u1 == 13.0 && f.u2 == 12.0);
  EXPECT(qw_characteristic_speeds(up, &slow, &fast) == QW_OK && near(slow, -2.0, 1e-14) && near(fast, 10.0, 1e-14));

  EXPECT(qw_shock_speed((qw_state){4.0, 5.0}, up, &W) == QW_OK && near(W, 14.0, 1e-12));
  EXPECT(qw_shock_speed((qw_state){0.0, 0.5}, up, &W) == QW_ERR_NOT_ON_LOCUS);
  EXPECT(strlen(qw_last_error()) > 0);
  EXPECT(qw_classify_shock((qw_state){9.0, -3.0}, up, 11.0, &kind) == QW_OK && kind == QW_SHOCK_OVERCOMPRESSIVE);
  EXPECT(strcmp(qw_shock_kind_name(QW_SHOCK_SLOW), "slow") == 0);

  EXPECT(qw_structure_exists((qw_state){7.0, -2.0}, up, 8.0, aniso, &v) == QW_OK && v == QW_VERDICT_NO);
  EXPECT(qw_structure_exists((qw_state){7.0, -2.0}, up, 8.0, iso, &v) == QW_OK && v == QW_VERDICT_YES);
  EXPECT(qw_structure_exists((qw_state){9.0, -3.0}, up, 11.0, iso, &v) == QW_ERR_NOT_A_SHOCK);
  {
    int exists = -1;
    EXPECT(qw_overcompressive_structure_exists((qw_state){9.0, -3.0}, up, 11.0, aniso, &exists) == QW_OK && !exists);
    EXPECT(qw_overcompressive_structure_exists((qw_state){13.0, -3.0}, up, 15.0, aniso, &exists) == QW_OK && exists);
    EXPECT(qw_overcompressive_structure_exists((qw_state){7.0, -2.0}, up, 8.0, aniso, &exists) == QW_ERR_NOT_A_SHOCK);
  }

  EXPECT(qw_undercompressive_speed(up, aniso, &W) == QW_OK && near(W, 4.0 + 2.0 * sqrt(3.0), 1e-12));
  EXPECT(qw_undercompressive_speed(up, iso, &W) == QW_ERR_NO_UNDERCOMPRESSIVE);
  EXPECT(qw_undercompressive_speed((qw_state){2.0, 0.0}, aniso, &W) == QW_ERR_DEGENERATE_AXIS);

  EXPECT(qw_key_points_of(up, aniso, &kp) == QW_OK);
  EXPECT(kp.has_D && kp.has_E && kp.has_F && kp.has_G);
  EXPECT(near(kp.F.u1, 2.0 + 6.0 * sqrt(3.0), 1e-12) && kp.F.u2 == -3.0);
  EXPECT(qw_key_points_of(up, iso, &kp) == QW_OK);
  EXPECT(!kp.has_D && !kp.has_E && !kp.has_F && !kp.has_G);
  EXPECT(kp.B.u1 == 8.0 && kp.B.u2 == -3.0);

  /* Invalid viscosity is an argument error, not a crash. */
  EXPECT(qw_key_points_of(up, (qw_viscosity){-1.0, 1.0}, &kp) == QW_ERR_INVALID_ARGUMENT);
  EXPECT(qw_flux(up, NULL) == QW_ERR_INVALID_ARGUMENT);
}

static void test_profile(void) {
  qw_profile* p = NULL;
  size_t n = 0;
  double xi;
  qw_state u;
  int family = -1;
  qw_viscosity aniso = {1.0, 0.5};

  EXPECT(qw_profile_find((qw_state){6.0, -1.0}, (qw_state){2.0, 3.0}, 6.0, aniso, &p) == QW_OK);
  EXPECT(p != NULL);
  EXPECT(qw_profile_size(p, &n) == QW_OK && n > 10);
  EXPECT(qw_profile_sample(p, n - 1, &xi, &u) == QW_OK && fabs(u.u1 - 2.0) < 1e-4);
  EXPECT(qw_profile_sample(p, n, &xi, &u) == QW_ERR_INVALID_ARGUMENT);
  EXPECT(qw_profile_is_family(p, &family) == QW_OK && family == 0);
  EXPECT(qw_profile_eval(p, -1e9, &u) == QW_OK && fabs(u.u1 - 6.0) < 1e-4);
  qw_profile_free(p);

  p = (qw_profile*)0x1;
  EXPECT(qw_profile_find((qw_state){7.0, -2.0}, (qw_state){2.0, 3.0}, 8.0, aniso, &p) == QW_ERR_NOT_FOUND);
  EXPECT(p == NULL);
  qw_profile_free(NULL);
}

static void test_riemann(void) {
  qw_riemann* r = NULL;
  qw_region region;
  int boundary = -1;
  size_t n = 0, needed = 0, bad = 99;
  qw_wave w;
  qw_state u;
  char small[8];
  char* text;
  qw_viscosity iso = {1.0, 2.0};
  qw_region labels[16];

  EXPECT(qw_riemann_solve((qw_state){5.0, 2.0}, (qw_state){2.0, 3.0}, iso, &r) == QW_OK);
  EXPECT(qw_riemann_region(r, &region, &boundary) == QW_OK && region == QW_REGION_1 && boundary == 0);
  EXPECT(strcmp(qw_region_name(region), "R1") == 0);
  EXPECT(strcmp(qw_region_pattern(region), "S1 S2") == 0);
  EXPECT(qw_riemann_wave_count(r, &n) == QW_OK && n == 2);
  EXPECT(qw_riemann_wave(r, 0, &w) == QW_OK && w.kind == QW_WAVE_SLOW_SHOCK && near(w.theta_min, 2.0, 1e-12));
  EXPECT(qw_riemann_wave(r, 1, &w) == QW_OK && w.kind == QW_WAVE_FAST_SHOCK && near(w.theta_max, 12.0, 1e-12));
  EXPECT(qw_riemann_wave(r, 2, &w) == QW_ERR_INVALID_ARGUMENT);
  EXPECT(qw_riemann_sample(r, 5.0, &u) == QW_OK && near(u.u1, 3.0, 1e-12) && near(u.u2, 4.0, 1e-12));
  EXPECT(qw_riemann_validate(r, iso, &bad) == QW_OK && bad == 0);
  EXPECT(strcmp(qw_wave_kind_name(QW_WAVE_JOUGUET), "Jouguet") == 0);

  /* Truncated copy still reports the full length. */
  EXPECT(qw_riemann_json(r, small, sizeof small, &needed) == QW_OK && needed > sizeof small);
  EXPECT(strlen(small) == sizeof small - 1);
  text = (char*)malloc(needed + 1);
  EXPECT(qw_riemann_json(r, text, needed + 1, &needed) == QW_OK);
  EXPECT(strstr(text, "\"region\": \"R1\"") != NULL);
  free(text);
  qw_riemann_free(r);

  EXPECT(qw_region_map((qw_state){2.0, 3.0}, iso, -10, 14, -9, 9, 4, labels) == QW_OK);
  EXPECT(qw_region_map((qw_state){2.0, 3.0}, iso, 1, 0, -9, 9, 4, labels) == QW_ERR_INVALID_ARGUMENT);
}

static void test_field(void) {
  qw_field *f0 = NULL, *f1 = NULL;
  qw_scheme s = qw_scheme_default();
  size_t n = 0, needed = 0;
  double t = 0.0, x, l1 = -1.0;
  qw_state u;
  char* meta;

  EXPECT(s.safety > 0.0 && s.safety <= 1.0 && s.frame_speed == 0.0);
  EXPECT(qw_resolved_dx((qw_viscosity){0.04, 0.08}, 0.0, &x) == QW_OK && near(x, 0.05, 1e-12));
  EXPECT(qw_resolved_dx((qw_viscosity){0.04, 0.08}, 10.0, &x) == QW_OK && x < 0.008);
  EXPECT(qw_resolved_dx((qw_viscosity){0.04, 0.08}, -1.0, &x) == QW_ERR_INVALID_ARGUMENT);
  EXPECT(qw_field_riemann((qw_state){5.0, 2.0}, (qw_state){2.0, 3.0}, -10, 10, 200, 0.0, &f0) == QW_OK);
  EXPECT(qw_field_size(f0, &n) == QW_OK && n == 200);
  EXPECT(qw_field_evolve(f0, (qw_viscosity){0.2, 0.4}, 0.2, &s, &f1) == QW_OK);
  EXPECT(qw_field_time(f1, &t) == QW_OK && near(t, 0.2, 1e-12));
  EXPECT(qw_field_get(f1, 0, &x, &u) == QW_OK && near(x, -9.95, 1e-12) && near(u.u1, 5.0, 1e-9));
  EXPECT(qw_field_metadata(f1, NULL, 0, &needed) == QW_OK && needed > 0);
  meta = (char*)malloc(needed + 1);
  EXPECT(qw_field_metadata(f1, meta, needed + 1, &needed) == QW_OK && strstr(meta, "dt_history") != NULL);
  free(meta);
  qw_field_free(f0);
  qw_field_free(f1);

  EXPECT(qw_field_riemann((qw_state){1, 1}, (qw_state){1, 1}, -1, 1, 8, 0.0, &f0) == QW_ERR_INVALID_ARGUMENT);
  EXPECT(f0 == NULL);

  EXPECT(qw_compare_to_riemann((qw_state){2, 3}, (qw_state){2, 3}, (qw_viscosity){0.04, 0.08}, 1.0, &l1) == QW_OK);
  EXPECT(l1 >= 0.0 && l1 <= 1e-8);
}

static void test_validation(void) {
  int passed = 0;
  size_t needed = 0;
  char buf[4096];
  size_t i;
  int found = 0;

  EXPECT(qw_suite_count() == 9);
  for (i = 0; i < qw_suite_count(); ++i) found += strcmp(qw_suite_name(i), "energy") == 0;
  EXPECT(found == 1);
  EXPECT(qw_suite_name(qw_suite_count()) == NULL);
  EXPECT(qw_validate("energy", 1, &passed, buf, sizeof buf, &needed) == QW_OK && passed == 1);
  EXPECT(strstr(buf, "[PASS] energy") != NULL);
  EXPECT(qw_validate("nonsense", 1, &passed, buf, sizeof buf, &needed) == QW_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_model();
  test_profile();
  test_riemann();
  test_field();
  test_validation();
  EXPECT(strcmp(qw_status_string(QW_ERR_BLOW_UP), "") != 0);
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed (library %s)\n", qw_version());
  return 0;
}
