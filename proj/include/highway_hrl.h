/* highway_hrl.h - C interface of the highway trap-escape simulator and
 * hierarchical DDQN trainer.
 *
 * All functions returning int use 0 for success and a negative hhrl_status
 * code otherwise; when an errbuf is supplied the failure reason is written
 * into it (NUL-terminated, truncated to errlen). Handles are opaque and must
 * be released with their matching hhrl_*_free function. Strings returned
 * through char** out-parameters are heap-allocated and released with
 * hhrl_string_free.
 */
#ifndef HIGHWAY_HRL_H
#define HIGHWAY_HRL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum hhrl_status {
    HHRL_OK = 0,
    HHRL_ERR_CONFIG = -1,   /* config parse/validation failure */
    HHRL_ERR_IO = -2,       /* file system failure */
    HHRL_ERR_STATE = -3,    /* bad handle state or argument */
    HHRL_ERR_MISMATCH = -4, /* checkpoint/config fingerprint mismatch */
    HHRL_ERR_INTERNAL = -5
};

typedef struct hhrl_config hhrl_config;
typedef struct hhrl_world hhrl_world;
typedef struct hhrl_policy hhrl_policy;

/* Library version string. */
const char* hhrl_version(void);

void hhrl_string_free(char* s);

/* ---- configuration ----------------------------------------------------- */

/* Loads a config file (TOML-style sections); NULL on failure. */
hhrl_config* hhrl_config_load(const char* path, char* errbuf, size_t errlen);
/* Parses config text; empty string yields the built-in defaults. */
hhrl_config* hhrl_config_parse(const char* text, char* errbuf, size_t errlen);
hhrl_config* hhrl_config_clone(const hhrl_config* cfg);
void hhrl_config_free(hhrl_config* cfg);

/* Canonical resolved form of every key. */
int hhrl_config_to_string(const hhrl_config* cfg, char** out);
/* Semantic fingerprint carried by checkpoints. */
int hhrl_config_fingerprint(const hhrl_config* cfg, char** out);
/* Overrides one key, e.g. hhrl_config_set(c, "scenario.trap_speed", "10.5"). */
int hhrl_config_set(hhrl_config* cfg, const char* dotted_key, const char* value,
                    char* errbuf, size_t errlen);

/* ---- training / evaluation / tooling ----------------------------------- */

typedef void (*hhrl_progress_fn)(const char* phase, int done, int total, void* user);

/* mode: "hier" or "flat". Writes curves, logs and the checkpoint bundle into
 * out_dir; resumes an interrupted run found there. */
int hhrl_train(const hhrl_config* cfg, const char* mode, const char* out_dir,
               hhrl_progress_fn progress, void* user, char* errbuf, size_t errlen);

/* Flat-baseline epsilon sweep; schedules is "start:end:steps[,...]". */
int hhrl_sweep_eps(const hhrl_config* cfg, const char* schedules, const char* out_dir,
                   hhrl_progress_fn progress, void* user, char* errbuf, size_t errlen);

/* Greedy evaluation of a trained run directory in the fixed test trap.
 * config may be NULL (the run's stored config is used). report_json receives
 * the aggregate metrics. seed < 0 uses the stored config seed. */
int hhrl_eval(const char* checkpoint_dir, const hhrl_config* cfg, int episodes,
              int max_steps, int64_t seed, const char* out_dir, char** report_json,
              hhrl_progress_fn progress, void* user, char* errbuf, size_t errlen);

/* Formats a trajectory JSONL file as a human-readable step table. */
int hhrl_replay_format(const char* trajectory_path, char** table_out, char* errbuf,
                       size_t errlen);

/* Final-window training summary of a run directory (escape/accident rates,
 * mean reward and speed over the last `window` episodes of each phase),
 * as JSON. */
int hhrl_training_summary(const char* run_dir, int window, char** json_out,
                          char* errbuf, size_t errlen);

/* ---- simulation embedding ---------------------------------------------- */

/* Observation vector width (26) and discrete ego action count (9). */
int hhrl_observation_size(void);
int hhrl_action_count(void);

/* Creates a trap-scenario world. test_mode != 0 fixes the trap offsets. */
hhrl_world* hhrl_world_create(const hhrl_config* cfg, uint64_t episode_seed,
                              int test_mode, int max_steps, char* errbuf, size_t errlen);
void hhrl_world_free(hhrl_world* w);

/* Advances one policy step (the control is held over the kinematic
 * substeps). Outputs are optional (pass NULL to skip). accident codes:
 * 0 none, 1 stopped, 2 off_road, 3 collision. */
int hhrl_world_step(hhrl_world* w, double acceleration, double steering,
                    double* reward_out, int* terminal_out, int* accident_out);

/* Writes the current 26-feature observation into obs26. */
int hhrl_world_observation(const hhrl_world* w, double* obs26);

int hhrl_world_vehicle_count(const hhrl_world* w);
/* state7 = {x_long, y_lat, heading, speed, length, width, kind} with kind
 * 0 ego, 1 trap, 2 traffic. */
int hhrl_world_vehicle(const hhrl_world* w, int index, int* id_out, double* state7);

/* 1 once the ego rear bumper has passed every trap vehicle front (latched). */
int hhrl_world_escaped(const hhrl_world* w);
int hhrl_world_steps(const hhrl_world* w);
double hhrl_world_total_reward(const hhrl_world* w);

/* ---- trained policies --------------------------------------------------- */

/* Loads the policy of a trained run directory (hier or flat bundle). */
hhrl_policy* hhrl_policy_load(const char* checkpoint_dir, char* errbuf, size_t errlen);
void hhrl_policy_free(hhrl_policy* p);

/* Greedy control for an observation. */
int hhrl_policy_control(const hhrl_policy* p, const double* obs26,
                        double* acceleration_out, double* steering_out);

#ifdef __cplusplus
}
#endif

#endif /* HIGHWAY_HRL_H */
