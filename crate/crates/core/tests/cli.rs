use std::path::PathBuf;
use std::process::{Command, Output};

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");

fn golden(name: &str) -> PathBuf {
    PathBuf::from(GOLDEN).join(name)
}

fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn arclocal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arclocal"))
        .args(args)
        .env_remove("ARCLOCAL_ORACLE_CAP")
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = arclocal(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    golden(name).to_str().unwrap().to_string()
}

const H1: &str = "n 4;0 1;1 2;3 2";
const C5: &str = "n 5;0 1;1 2;2 3;3 4;4 0";
const APEX_PENDANT: &str = "n 7;0 1;0 2;0 3;0 4;0 5;1 2;2 3;3 4;4 5;5 1;0 6";

#[test]
fn classify_reports_witnesses() {
    let (code, out, _) = run(&["classify", "--inline", H1]);
    assert_eq!(code, 0);
    assert!(
        out.contains("arc_locally_in_semicomplete    NO   witness H1 0 1 2 3"),
        "{out}"
    );
    assert!(out.contains("arc_locally_out_semicomplete   YES"), "{out}");

    let (code, out, _) = run(&["classify", "--inline", C5]);
    assert_eq!(code, 0);
    for row in [
        "arc_locally_in_semicomplete",
        "arc_locally_out_semicomplete",
        "arc_locally_semicomplete",
    ] {
        assert!(
            out.lines()
                .any(|l| l.starts_with(row) && l.split_whitespace().nth(1) == Some("YES")),
            "{row}: {out}"
        );
    }
    assert!(
        out.lines()
            .any(|l| l.starts_with("bipartite") && l.ends_with("NO")),
        "{out}"
    );
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = std::env::temp_dir().join(format!("arclocal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let (code, _, err) = run(&["classify", empty.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");

    let (code, _, err) = run(&["classify", "--inline", "n 3;0 1;1 x"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    let (code, _, _) = run(&["classify", "/nonexistent/file.txt"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["decompose", "--inline", C5]).0, 2);
    assert_eq!(run(&["decompose", "--inline", C5, "--class", "sideways"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["generate", "extended-cycle", "--sizes", "1,1"]).0, 2);
    assert_eq!(run(&["--oracle-cap", "99", "classify", "--inline", C5]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn decompose_golden_outputs() {
    for (input, class, stem) in [
        ("figure2.txt", "als", "figure2_als"),
        ("apex_c5.txt", "in", "apex_c5_in"),
    ] {
        for (format, ext) in [("text", "txt"), ("json", "json"), ("dot", "dot")] {
            let (code, out, err) = run(&["decompose", &path(input), "--class", class, "--format", format]);
            assert_eq!(code, 0, "{err}");
            assert_eq!(out, read_golden(&format!("{stem}.{ext}")), "{stem}.{ext}");
        }
    }
}

#[test]
fn apex_over_c5_decomposes_in_both_directions() {
    let (code, out, _) = run(&[
        "decompose",
        &path("apex_c5.txt"),
        "--class",
        "in",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "tripartition");
    assert_eq!(v["V1"], serde_json::json!([0]));

    let inverse = "n 6;1 0;2 0;3 0;4 0;5 0;2 1;3 2;4 3;5 4;1 5";
    let (code, out, _) = run(&[
        "decompose",
        "--inline",
        inverse,
        "--class",
        "out",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class"], "out");
    assert_eq!(v["V1"], serde_json::json!([0]));
}

#[test]
fn clique_cut_is_reported() {
    let (code, out, _) = run(&[
        "decompose",
        "--inline",
        APEX_PENDANT,
        "--class",
        "in",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "clique_cut");
    assert_eq!(v["cut"], serde_json::json!([0]));
}

#[test]
fn rejections_exit_1_with_witness() {
    let (code, out, _) = run(&["decompose", "--inline", H1, "--class", "in"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: H1 0 1 2 3"), "{out}");

    let (code, out, _) = run(&["decompose", "--inline", H1, "--class", "in", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness"]["pattern"], "H1");
    assert_eq!(v["witness"]["vertices"], serde_json::json!([0, 1, 2, 3]));

    let (code, out, _) = run(&["decompose", "--inline", "n 4;0 1;2 3", "--class", "als"]);
    assert_eq!(code, 1);
    assert!(out.contains("disconnected"), "{out}");
}

#[test]
fn enumerate_verify_summaries() {
    let (code, out, _) = run(&[
        "enumerate-verify",
        "--n",
        "4",
        "--class",
        "in",
        "--property",
        "main-theorem",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "4096 scanned, 2034 filtered, 0 failures\n");

    let (code, out, _) = run(&[
        "enumerate-verify",
        "--n",
        "3",
        "--class",
        "als",
        "--property",
        "dichotomy",
        "--jobs",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with(", 0 failures\n"), "{out}");

    let (code, _, err) = run(&["enumerate-verify", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");

    assert_eq!(
        run(&["enumerate-verify", "--n", "3", "--property", "nonsense"]).0,
        2
    );
}

#[test]
fn oracle_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_arclocal"))
        .args(["oracle", "perfect", "--inline", C5])
        .env("ARCLOCAL_ORACLE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not computed"));

    let (code, out, _) = run(&["oracle", "perfect", "--inline", C5]);
    assert_eq!(code, 0);
    assert_eq!(out, "perfect: NO\nwitness: odd hole on 0 1 2 3 4\n");
    let (_, out, _) = run(&[
        "--oracle-cap",
        "4",
        "oracle",
        "clique-cut",
        "--inline",
        "n 3;0 1;1 2",
    ]);
    assert_eq!(out, "clique cut: {1}\n");
}

#[test]
fn generate_is_reproducible() {
    let a = run(&["--seed", "9", "generate", "member", "--class", "in", "--n", "8"]);
    let b = run(&["--seed", "9", "generate", "member", "--class", "in", "--n", "8"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let (code, out, _) = run(&["classify", "--inline", &a.1.replace('\n', ";")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("arc_locally_in_semicomplete    YES"), "{out}");

    let (_, out, _) = run(&["generate", "extended-cycle", "--sizes", "2,1,3,2,1"]);
    assert_eq!(out, read_golden("figure2.txt"));
}

#[test]
fn every_dot_output_parses() {
    let cases: Vec<Vec<String>> = vec![
        vec![
            "decompose".into(),
            path("figure2.txt"),
            "--class".into(),
            "als".into(),
        ],
        vec![
            "decompose".into(),
            path("apex_c5.txt"),
            "--class".into(),
            "in".into(),
        ],
        vec![
            "decompose".into(),
            "--inline".into(),
            APEX_PENDANT.into(),
            "--class".into(),
            "in".into(),
        ],
        vec![
            "decompose".into(),
            "--inline".into(),
            "n 3;0 1;1 2".into(),
            "--class".into(),
            "in".into(),
        ],
        vec!["classify".into(), "--inline".into(), H1.into()],
        vec![
            "generate".into(),
            "random".into(),
            "--n".into(),
            "7".into(),
            "--p-digon".into(),
            "0.2".into(),
        ],
        vec![
            "oracle".into(),
            "extended-cycle".into(),
            "--inline".into(),
            C5.into(),
        ],
    ];
    for mut args in cases {
        args.extend(["--format".to_string(), "dot".to_string()]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        if let Err(e) = dot::check(&out) {
            panic!("{args:?}: {e}\n{out}");
        }
    }
    assert!(dot::check("digraph D { 0 -> ; }").is_err());
    assert!(dot::check("digraph D { 0 [label=\"x\"; }").is_err());
    assert!(dot::check("graph D { 0 -> 1; }").is_err());
}

/// A checker for the DOT subset: `digraph ID { stmt* }` where a statement
/// is a node, edge (`->` chains) or `node`/`edge`/`graph` attribute
/// statement, attribute lists are `[k=v, ...]`, and IDs are bare words,
/// numerals or quoted strings.
mod dot {
    #[derive(Debug, Clone, PartialEq)]
    enum Tok {
        Id(String),
        Arrow,
        Sym(char),
    }

    fn lex(src: &str) -> Result<Vec<Tok>, String> {
        let mut toks = Vec::new();
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c == '"' {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => s.push(chars.next().ok_or("dangling escape")?),
                        Some('"') => break,
                        Some(ch) => s.push(ch),
                        None => return Err("unterminated string".into()),
                    }
                }
                toks.push(Tok::Id(s));
            } else if c == '-' {
                chars.next();
                match chars.next() {
                    Some('>') => toks.push(Tok::Arrow),
                    other => return Err(format!("expected '>' after '-', got {other:?}")),
                }
            } else if "{}[];=,".contains(c) {
                chars.next();
                toks.push(Tok::Sym(c));
            } else if c.is_alphanumeric() || c == '_' || c == '.' {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_alphanumeric() || ch == '_' || ch == '.' {
                        s.push(ch);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Id(s));
            } else {
                return Err(format!("unexpected character {c:?}"));
            }
        }
        Ok(toks)
    }

    struct Parser {
        toks: Vec<Tok>,
        pos: usize,
    }

    impl Parser {
        fn peek(&self) -> Option<&Tok> {
            self.toks.get(self.pos)
        }

        fn next(&mut self) -> Result<Tok, String> {
            let t = self
                .toks
                .get(self.pos)
                .cloned()
                .ok_or("unexpected end of input")?;
            self.pos += 1;
            Ok(t)
        }

        fn expect(&mut self, t: Tok) -> Result<(), String> {
            let got = self.next()?;
            if got == t {
                Ok(())
            } else {
                Err(format!("expected {t:?}, got {got:?}"))
            }
        }

        fn id(&mut self) -> Result<String, String> {
            match self.next()? {
                Tok::Id(s) => Ok(s),
                other => Err(format!("expected an ID, got {other:?}")),
            }
        }

        fn attr_list(&mut self) -> Result<(), String> {
            self.expect(Tok::Sym('['))?;
            loop {
                if self.peek() == Some(&Tok::Sym(']')) {
                    self.pos += 1;
                    return Ok(());
                }
                self.id()?;
                self.expect(Tok::Sym('='))?;
                self.id()?;
                if self.peek() == Some(&Tok::Sym(',')) {
                    self.pos += 1;
                }
            }
        }

        fn stmt(&mut self) -> Result<(), String> {
            let head = self.id()?;
            if ["node", "edge", "graph"].contains(&head.as_str()) {
                return self.attr_list();
            }
            while self.peek() == Some(&Tok::Arrow) {
                self.pos += 1;
                self.id()?;
            }
            if self.peek() == Some(&Tok::Sym('[')) {
                self.attr_list()?;
            }
            Ok(())
        }

        fn graph(&mut self) -> Result<(), String> {
            match self.id()?.as_str() {
                "digraph" => {}
                other => return Err(format!("expected `digraph`, got {other:?}")),
            }
            if matches!(self.peek(), Some(Tok::Id(_))) {
                self.pos += 1;
            }
            self.expect(Tok::Sym('{'))?;
            while self.peek() != Some(&Tok::Sym('}')) {
                self.stmt()?;
                if self.peek() == Some(&Tok::Sym(';')) {
                    self.pos += 1;
                }
            }
            self.expect(Tok::Sym('}'))?;
            match self.peek() {
                None => Ok(()),
                Some(t) => Err(format!("trailing token {t:?}")),
            }
        }
    }

    pub fn check(src: &str) -> Result<(), String> {
        Parser {
            toks: lex(src)?,
            pos: 0,
        }
        .graph()
    }
}
