"""The golden-file CLI case table, shared by the test and the regeneration tool."""

CASES = [
    ("eval_sum", ["eval", "1/3 + 1/6", "-p", "10", "--fuel", "64"], 0),
    ("eval_rho2", ["eval", "rho2(9,99)", "-p", "4", "--fuel", "8"], 0),
    ("eval_sqrt2_json", ["eval", "sqrt2 * sqrt2", "-p", "12", "--format", "json"], 0),
    ("eval_abs", ["eval", "abs(1/4 - sqrt2)", "-p", "10"], 0),
    ("pi_30", ["pi", "--digits", "30"], 0),
    ("hunt_found", ["hunt", "--digit", "9", "--run", "2", "--budget", "100"], 0),
    ("hunt_unresolved", ["hunt", "--digit", "9", "--run", "99", "--budget", "50"], 3),
    ("encode_123", ["encode", "1", "2", "3"], 0),
    ("encode_empty", ["encode"], 0),
    ("decode_11249", ["decode", "11249"], 0),
    ("euclid_six", ["euclid", "2", "3", "5", "7", "11", "13"], 0),
    ("dickson_two", ["dickson", "--seqs", "3,2,1,0;0,1,2", "--fuel", "32"], 0),
    ("ramsey_6322", ["ramsey", "--M", "6", "--n", "3", "--k", "2", "--r", "2"], 0),
    ("ramsey_5322_json", ["ramsey", "--M", "5", "--n", "3", "--k", "2", "--r", "2",
                          "--format", "json"], 0),
    ("ramsey_star", ["ramsey", "--M", "3", "--n", "1", "--k", "1", "--r", "1", "--star"], 0),
    ("subbar_len3", ["subbar", "--spec", "len=3", "--depth", "4"], 0),
    ("subbar_notbar", ["subbar", "--spec", "sum>=3", "--depth", "2"], 0),
    ("game_omega2_win", ["game", "--mode", "omega2", "--c", "n=3", "--bound", "5"], 0),
    ("game_omega2_counter", ["game", "--mode", "omega2", "--c", "i=0", "--bound", "4"], 0),
    ("game_2omega", ["game", "--mode", "2omega", "--c", "i=1", "--p0", "0", "--p1", "0"], 0),
    ("ivt_approx_id", ["ivt", "--map", "id", "--y", "1/3", "-p", "8"], 0),
    ("ivt_approx_f0", ["ivt", "--map", "f0:7,1", "--y", "1/2", "-p", "8"], 0),
    ("ivt_lnc", ["ivt", "--map", "id", "--y", "1/4", "-p", "6", "--mode", "lnc"], 0),
    ("ivt_countable", ["ivt", "--map", "id", "--y", "2/7", "-p", "6", "--mode", "countable"], 0),
    ("ivt_approx_f2", ["ivt", "--map", "f2:7,1,9,1", "--y", "1/2", "-p", "6"], 0),
]
