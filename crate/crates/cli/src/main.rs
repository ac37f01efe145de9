//! Batch front end for symmetric group module decompositions, multiset
//! tableau enumeration, identity verification and invariant ring queries.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check
//! fails, 2 on usage errors.

mod commands;
mod config;

use config::Flags;

const USAGE: &str = "\
usage: supersym <command> [flags]

commands:
  decompose   multiplicities of the irreducibles in one component
                --n N --alpha 2,1 --beta 1 [--m M] [--mbar M']
                [--method tableaux|symbolic|brute] [--check] [--cap K]
                or: --shape [..] --entries '{{..},{..}}' [--n N]
  tableaux    enumerate or validate multiset tableaux
                --shape [..] [--alpha ..] [--beta ..] [--count-only]
                or: --validate FILE
  verify      run the identity suites over a grid
                [--max-n N] [--max-m M] [--max-mbar M'] [--max-weight W]
                [--max-mu K] [--jobs J]
  invariants  count | span | reduce | relations
                count/span: --n N --alpha .. --beta ..
                reduce:     --n N --multiset '{1,1}'
                relations:  [--n N] [--m M] [--mbar M'] [--max-size K]

common flags: --format text|json
";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = args.first().map(String::as_str) else {
        eprint!("{USAGE}");
        std::process::exit(2);
    };
    if command == "help" || command == "--help" || command == "-h" {
        print!("{USAGE}");
        return;
    }
    let flags = match Flags::parse(&args[1..]) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    let outcome = match command {
        "decompose" => commands::cmd_decompose(&flags),
        "tableaux" => commands::cmd_tableaux(&flags),
        "verify" => commands::cmd_verify(&flags),
        "invariants" => commands::cmd_invariants(&flags),
        other => {
            eprintln!("error: unknown command {other:?}");
            eprint!("{USAGE}");
            std::process::exit(2);
        }
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
