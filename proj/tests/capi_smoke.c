/* Compiles the public header as C and drives one full round trip. */
#include <stdio.h>
#include <string.h>

#include "definetti/definetti.h"

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                            \
    }                                                      \
  } while (0)

int main(void) {
  const char* gauss =
      "{\"kind\": \"classical\", \"n\": 1, \"K\": 4, \"entries\": [{\"word\": [1, 1], \"num\": \"1\", \"den\": \"1\"}]}";
  dft_table* cum = NULL;
  dft_table* mom = NULL;
  dft_report* rep = NULL;
  char* text = NULL;
  int is_moment = -1;
  int n = 0;
  int K = 0;

  CHECK(strlen(dft_version()) > 0);
  CHECK(dft_table_from_json(gauss, &cum) == DFT_OK);
  CHECK(dft_table_info(cum, &is_moment, NULL, &n, &K) == DFT_OK);
  CHECK(is_moment == 0 && n == 1 && K == 4);
  CHECK(dft_transform(cum, DFT_CLASSICAL, DFT_CUMULANTS_TO_MOMENTS, &mom) == DFT_OK);
  CHECK(dft_table_to_json(mom, &text) == DFT_OK);
  CHECK(strstr(text, "\"3\"") != NULL);
  dft_string_free(text);

  CHECK(dft_independence_test(mom, DFT_CLASSICAL, "0", &rep) == DFT_OK);
  CHECK(dft_report_outcome(rep) == DFT_PASS);
  dft_report_free(rep);
  dft_table_free(mom);

  CHECK(dft_table_from_json("{", &mom) == DFT_ERR_PARSE);
  CHECK(mom == NULL);
  CHECK(strlen(dft_last_error()) > 0);

  dft_table_free(cum);
  dft_table_free(NULL);
  dft_report_free(NULL);
  return 0;
}
