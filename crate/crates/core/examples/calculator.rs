//! Driving the calculator from code, as the `hahn repl` command does.

use hahnfield::cli::{run_command, Command, Session, SessionConfig};

fn main() {
    let mut session = Session::new(SessionConfig::new(1));
    for line in [
        "let a = 1 + t",
        "inv a",
        "a^3",
        "log 2*a",
        ":set cutoff 5",
        "1/a",
        "exp t^-2",
        ":set rank 2",
        "t^(1,-1) * t^(0,1)",
    ] {
        println!("> {line}");
        match session.handle_line(line) {
            Some(out) if !out.text.is_empty() => println!("{}", out.text),
            _ => {}
        }
    }

    let out = run_command(
        &Command::RefuteConvexity { oracle: "stutter".into(), param: Some(3), max_steps: 5, trace: false },
        &SessionConfig::default(),
    );
    println!("{}", out.text);
}
