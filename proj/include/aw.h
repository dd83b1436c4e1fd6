#ifndef AW_H
#define AW_H

/* C interface to the cipher workbench: AEAD, hashing, known-answer tests,
 * the cycle-accurate protocol simulator and the cost reports.  All entry
 * points return an error code; strings returned through char** are owned by
 * the caller and released with aw_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aw_config aw_config;

enum {
    AW_OK = 0,
    AW_ERR_USAGE = 1,  /* bad arguments or malformed input */
    AW_ERR_VERIFY = 2, /* tag or vector verification failed */
    AW_ERR_CONFIG = 3  /* configuration invalid */
};

enum { AW_CIPHER_ACE = 0, AW_CIPHER_WAGE = 1 };
enum { AW_ENCRYPT = 0, AW_DECRYPT = 1 };

const char* aw_version(void);

int aw_config_default(aw_config** out);
int aw_config_load_file(const char* path, aw_config** out, char** err);
int aw_config_load_text(const char* text, aw_config** out, char** err);
void aw_config_free(aw_config* cfg);
uint64_t aw_config_fingerprint(const aw_config* cfg);

/* Encrypt: payload is the plaintext; payload_out receives the ciphertext
 * (payload_len bytes) and tag_out the 128 bit tag; tag_in is ignored.
 * Decrypt: payload is the ciphertext and tag_in the expected tag; on
 * mismatch returns AW_ERR_VERIFY and zeroes payload_out. */
int aw_aead(const aw_config* cfg, int cipher, unsigned p, int direction,
            const uint8_t key[16], const uint8_t nonce[16],
            const uint8_t* ad, size_t ad_len,
            const uint8_t* payload, size_t payload_len,
            const uint8_t* tag_in, uint8_t* payload_out, uint8_t tag_out[16]);

/* 256 bit hash (ACE based). */
int aw_hash(const aw_config* cfg, unsigned p, const uint8_t* msg, size_t msg_len,
            uint8_t digest[32]);

int aw_kat_generate(const aw_config* cfg, char** out);
/* AW_ERR_VERIFY on mismatch; message names the first differing record. */
int aw_kat_verify(const aw_config* cfg, const char* text, char** message);

/* Runs a protocol script; trace is text columns, or structured when
 * as_json is nonzero. */
int aw_simulate(const aw_config* cfg, const char* script_text, int as_json,
                char** trace, char** err);

/* Area/throughput scaling report for one cipher. */
int aw_report(const aw_config* cfg, int cipher, int as_json, char** out);

void aw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AW_H */
