/* C API for the senta sentiment-analysis core.
 *
 * All functions return senta_status; on failure senta_last_error() carries a
 * human-readable message for the calling thread. Objects are opaque handles
 * released with their matching _free function. Strings returned through
 * char** are heap-allocated and must be released with senta_string_free.
 */
#ifndef SENTA_H_
#define SENTA_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum senta_status {
  SENTA_OK = 0,
  SENTA_ERR_IO = 1,
  SENTA_ERR_PARSE = 2,
  SENTA_ERR_INVALID = 3,
  SENTA_ERR_INTERNAL = 4
} senta_status;

/* Label codes follow the canonical order. */
enum {
  SENTA_LABEL_NEGATIVE = 0,
  SENTA_LABEL_NEUTRAL = 1,
  SENTA_LABEL_POSITIVE = 2,
  SENTA_LABEL_UNKNOWN = 3
};

typedef struct senta_pipeline senta_pipeline;
typedef struct senta_lexicon senta_lexicon;
typedef struct senta_corpus senta_corpus;
typedef struct senta_model senta_model;

const char* senta_last_error(void);
void senta_string_free(char* s);

/* ---- text pipeline ---- */

/* reduction_mode: "stem" | "lemmatize" | "none". Any list path may be NULL
 * or empty to skip that stage's data. */
senta_status senta_pipeline_create(const char* stopwords_path,
                                   const char* slang_path,
                                   const char* lemma_path,
                                   const char* reduction_mode,
                                   senta_pipeline** out);
void senta_pipeline_free(senta_pipeline* p);

senta_status senta_normalize(const char* raw, char** out);

/* Full pipeline on one string; tokens joined by single spaces. */
senta_status senta_preprocess_text(const senta_pipeline* p, const char* raw,
                                   char** out_tokens);

/* ---- lexicon and scoring ---- */

senta_status senta_lexicon_load(const char* path, senta_lexicon** out);
void senta_lexicon_free(senta_lexicon* lex);
senta_status senta_lexicon_size(const senta_lexicon* lex, int64_t* out);

/* tokens: space-separated preprocessed tokens. */
senta_status senta_score_pattern(const senta_lexicon* lex, const char* tokens,
                                 double* polarity, double* subjectivity,
                                 int* matched_count);
senta_status senta_score_valence(const senta_lexicon* lex, const char* tokens,
                                 double* compound, double* pos_frac,
                                 double* neg_frac, double* neu_frac);
senta_status senta_label_from_score(double score, double neutral_low,
                                    double neutral_high, int* label);

/* ---- corpora ---- */

/* Sentiment140-layout CSV; limit < 0 means all rows. */
senta_status senta_corpus_load_s140(const char* path, int64_t limit,
                                    senta_corpus** out);
/* Newline-delimited JSON objects with at least a "text" field. */
senta_status senta_corpus_load_dump(const char* path, senta_corpus** out);
/* A corpus previously written by senta_corpus_save. */
senta_status senta_corpus_load_processed(const char* path, senta_corpus** out);
void senta_corpus_free(senta_corpus* corpus);

senta_status senta_corpus_size(const senta_corpus* corpus, int64_t* out);
/* {"total_records":..,"per_class":{..},"unknown":..,"malformed_rows":..} */
senta_status senta_corpus_stats_json(const senta_corpus* corpus, char** out);

senta_status senta_corpus_preprocess(senta_corpus* corpus,
                                     const senta_pipeline* p, int threads);
senta_status senta_corpus_save(const senta_corpus* corpus, const char* path);

/* method: "pattern" | "valence". Writes the new label into every record and
 * returns the before/after distribution as JSON. */
senta_status senta_corpus_relabel(senta_corpus* corpus,
                                  const senta_lexicon* lex, const char* method,
                                  double neutral_low, double neutral_high,
                                  char** report_json);

/* label: SENTA_LABEL_*; mode: "common" | "unique"; top_k < 0 for all rows.
 * Returns two-column CSV "token,count". */
senta_status senta_corpus_word_frequency_csv(const senta_corpus* corpus,
                                             int label, const char* mode,
                                             int64_t top_k, char** out_csv);

/* ---- experiments ---- */

/* config_json keys (all optional):
 *   models: ["nb","softmax","svm","forest","gbt"] (default all)
 *   splits: ["60-40","70-30","80-20"]             (default all three)
 *   k: 5 (0 disables cross-validation), seed, threads, min_df,
 *   truncate: true, labels: "relabeled"|"original",
 *   class_weight: "none"|"balanced", hyperparameters per model under
 *   "nb"/"softmax"/"svm"/"forest"/"gbt" (e.g. {"forest":{"n_trees":50}}).
 * When output_dir is non-NULL, report CSV/tables and per-cell model files
 * are written beneath it. Returns the report as JSON. */
senta_status senta_experiment_run(const senta_corpus* corpus,
                                  const senta_lexicon* lex,
                                  const char* config_json,
                                  const char* output_dir, char** report_json);

/* ---- models ---- */

senta_status senta_model_load(const char* path, senta_model** out);
void senta_model_free(senta_model* model);
/* tokens: space-separated preprocessed tokens, vectorized against the
 * model's embedded vocabulary. scores: 3 doubles in canonical order. */
senta_status senta_model_predict(const senta_model* model, const char* tokens,
                                 int* label, double* scores);

/* Evaluates a model against a labeled corpus: confusion + metrics JSON. */
senta_status senta_model_evaluate(const senta_model* model,
                                  const senta_corpus* corpus,
                                  const char* labels /* "label"|"original" */,
                                  char** report_json);

/* ---- personality assessment ---- */

/* config_json keys: method ("pattern"|"valence"|"model"), top_k,
 * neutral_low, neutral_high. model may be NULL unless method=="model".
 * When output_dir is non-NULL the report files are written there. */
senta_status senta_assess(senta_corpus* corpus, const senta_lexicon* lex,
                          const senta_model* model, const char* config_json,
                          const char* output_dir, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SENTA_H_ */
