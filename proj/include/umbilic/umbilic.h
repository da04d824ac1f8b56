#ifndef UMBILIC_UMBILIC_H
#define UMBILIC_UMBILIC_H

#include <stddef.h>

#if defined(_WIN32)
#define UMB_API __declspec(dllexport)
#else
#define UMB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum umb_status {
  UMB_OK = 0,
  UMB_ERR_PARSE = 1,
  UMB_ERR_DOMAIN = 2,
  UMB_ERR_NONFINITE = 3,
  UMB_ERR_ZERO_ON_CURVE = 4,
  UMB_ERR_UMBILIC_ON_CURVE = 5,
  UMB_ERR_TANGENT_ZERO = 6,
  UMB_ERR_NO_CONVERGENCE = 7,
  UMB_ERR_UMBILIC = 8,
  UMB_ERR_EQUI_DIAGONAL = 9,
  UMB_ERR_INVALID_ARGUMENT = 10,
  UMB_ERR_IO = 11,
  UMB_ERR_INTERNAL = 12
} umb_status;

typedef struct umb_surface umb_surface;
typedef struct umb_report umb_report;

UMB_API const char* umb_version(void);
UMB_API const char* umb_status_name(umb_status s);
/* Message of the last failure on the calling thread; "" after success. */
UMB_API const char* umb_last_error(void);

/* Surface text forms: rez3, rez2zbar, bates, paraboloid, gh[:lam=L],
   fm:m=M,a=A, fm1:m=M,a=A, gm:m=M,a=A[,F=tanh|oneminusexp][,M=W],
   lambda:m=M,a=A, dual:<surface>, expr:<expression>. */
UMB_API umb_status umb_surface_parse(const char* text, umb_surface** out);
UMB_API void umb_surface_free(umb_surface* s);
UMB_API const char* umb_surface_name(const umb_surface* s);
UMB_API size_t umb_surface_warning_count(const umb_surface* s);
UMB_API const char* umb_surface_warning(const umb_surface* s, size_t i);

/* Jet at (x, y), or at (r, theta) when polar != 0. out receives 10 values:
   value, first (2), second (3), third (4); third is zero for order 2. */
UMB_API umb_status umb_jet(const umb_surface* s, double x, double y, int order, int polar, double out[10]);

/* curve: circle:R[@X,Y] | ellipse:A,B[@X,Y] | auto
   route: D | delta | direct | sign-change | hessian-cartesian |
          hessian-polar | hessian-direct | infinity | all */
UMB_API umb_status umb_index(const umb_surface* s, const char* curve, const char* route, umb_report** out);
UMB_API umb_status umb_scan(const umb_surface* s, double xmin, double xmax, double ymin, double ymax, int nx, int ny,
                    umb_report** out);

typedef struct umb_regularity_options {
  double R;        /* radii R * 4^k, k = 1..radii */
  int radii;
  int theta_grid;
  double c;        /* negative: 2a for fm/gm, else 0 */
  int limits;      /* also sample the limits near the origin of the inversion */
} umb_regularity_options;
UMB_API void umb_regularity_options_default(umb_regularity_options* o);
UMB_API umb_status umb_regularity(const umb_surface* s, const umb_regularity_options* o, umb_report** out);

/* Non-positive radii select defaults. */
UMB_API umb_status umb_duality(const umb_surface* s, double radius_out, double radius_in, umb_report** out);

/* suite: indices | regularity | duality | ribaucour | all */
UMB_API umb_status umb_verify(const char* suite, umb_report** out);

typedef struct umb_export_options {
  const char* what;   /* field-csv | field-svg | mesh-obj */
  const char* field;  /* principal | D | delta | hessian | hessian-delta */
  double xmin, xmax, ymin, ymax;
  int nx, ny;
  int annulus;        /* field-svg on r0 <= r <= r1 instead of the rectangle */
  double r0, r1;
  int nr, ntheta;
  const char* mesh;   /* inversion | congruence */
  double rmax;
  int n_radial, n_theta;
} umb_export_options;
UMB_API void umb_export_options_default(umb_export_options* o);
UMB_API umb_status umb_export(const umb_surface* s, const umb_export_options* o, const char* path, umb_report** out);

/* Report accessors; strings live as long as the report. */
UMB_API const char* umb_report_json(const umb_report* r);
UMB_API const char* umb_report_text(const umb_report* r);
UMB_API int umb_report_passed(const umb_report* r);
UMB_API size_t umb_report_index_count(const umb_report* r);
UMB_API int umb_report_twice_index(const umb_report* r, size_t i);
UMB_API const char* umb_report_route(const umb_report* r, size_t i);
UMB_API void umb_report_free(umb_report* r);

#ifdef __cplusplus
}
#endif

#endif
