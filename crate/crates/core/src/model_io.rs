//! The `.dag` text format.
//!
//! ```text
//! document  := "dag" "{" statement* "}"
//! statement := node | edge
//! node      := NAME ( "[" attr ( "," attr )* "]" )?
//! attr      := "exposure" | "outcome" | "adjusted" | "latent"
//! edge      := NAME "->" NAME
//! NAME      := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace separates tokens and `#` comments run to the end of the line.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind, Span};
use crate::graph::{GraphBuilder, MixedGraph, Vertex};
use crate::roles::{Role, RoleAssignment};

/// A parsed causal diagram: a DAG plus variable roles.
#[derive(Debug, Clone)]
pub struct DiagramDocument {
    pub graph: MixedGraph,
    pub roles: RoleAssignment,
    /// Start of each statement, in source order.
    pub spans: Vec<Span>,
}

/// Documents compare by graph and roles; source positions are ignored.
impl PartialEq for DiagramDocument {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.roles == other.roles
    }
}

impl Eq for DiagramDocument {}

impl DiagramDocument {
    pub fn new(graph: MixedGraph, roles: RoleAssignment) -> Self {
        DiagramDocument {
            graph,
            roles,
            spans: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse(text)
    }

    pub fn serialize(&self) -> String {
        serialize(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Arrow,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Name(n) => format!("`{n}`"),
            Token::LBrace => "`{`".into(),
            Token::RBrace => "`}`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::Comma => "`,`".into(),
            Token::Arrow => "`->`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn syntax(msg: impl Into<String>, span: Span) -> ParseError {
    ParseError::new(ParseErrorKind::Syntax(msg.into()), span)
}

fn tokenize(text: &str) -> Result<Vec<(Token, Span)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let span = Span { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            '{' | '}' | '[' | ']' | ',' => {
                bump(&mut chars);
                let tok = match c {
                    '{' => Token::LBrace,
                    '}' => Token::RBrace,
                    '[' => Token::LBracket,
                    ']' => Token::RBracket,
                    _ => Token::Comma,
                };
                tokens.push((tok, span));
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    tokens.push((Token::Arrow, span));
                } else {
                    return Err(syntax("expected `->` after `-`", span));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                tokens.push((Token::Name(name), span));
            }
            other => return Err(syntax(format!("unexpected character `{other}`"), span)),
        }
    }
    tokens.push((Token::End, Span { line, column }));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, Span)>,
    pos: usize,
    builder: GraphBuilder,
    roles: RoleAssignment,
    first_seen: Vec<Span>,
    spans: Vec<Span>,
}

impl Parser {
    fn peek(&self) -> &(Token, Span) {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> (Token, Span) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<Span, ParseError> {
        let (tok, span) = self.next();
        if tok == want {
            Ok(span)
        } else {
            Err(syntax(
                format!("expected {}, found {}", want.describe(), tok.describe()),
                span,
            ))
        }
    }

    fn vertex(&mut self, name: &str, span: Span) -> Vertex {
        let v = self.builder.add_vertex(name);
        if v == self.first_seen.len() {
            self.first_seen.push(span);
        }
        v
    }

    fn document(mut self) -> Result<DiagramDocument, ParseError> {
        match self.next() {
            (Token::Name(n), _) if n == "dag" => {}
            (tok, span) => return Err(syntax(format!("expected `dag`, found {}", tok.describe()), span)),
        }
        self.expect(Token::LBrace)?;
        loop {
            match self.peek().clone() {
                (Token::RBrace, _) => {
                    self.next();
                    break;
                }
                (Token::Name(name), span) => {
                    self.next();
                    self.spans.push(span);
                    self.statement(name, span)?;
                }
                (tok, span) => {
                    return Err(syntax(
                        format!("expected a statement or `}}`, found {}", tok.describe()),
                        span,
                    ))
                }
            }
        }
        let (tok, span) = self.peek().clone();
        if tok != Token::End {
            return Err(syntax(
                format!("unexpected {} after the closing `}}`", tok.describe()),
                span,
            ));
        }
        let graph = self.builder.build();
        if let Err(crate::Error::Cyclic(name)) = graph.topological_numbering() {
            let span = self.first_seen[graph.vertex(&name).expect("known vertex")];
            return Err(ParseError::new(ParseErrorKind::Cyclic(name), span));
        }
        Ok(DiagramDocument {
            graph,
            roles: self.roles,
            spans: self.spans,
        })
    }

    fn statement(&mut self, name: String, span: Span) -> Result<(), ParseError> {
        if self.peek().0 == Token::Arrow {
            self.next();
            let (target, target_span) = match self.next() {
                (Token::Name(n), s) => (n, s),
                (tok, s) => {
                    return Err(syntax(
                        format!("expected a vertex name after `->`, found {}", tok.describe()),
                        s,
                    ))
                }
            };
            if target == name {
                return Err(ParseError::new(ParseErrorKind::SelfLoop(name), span));
            }
            let u = self.vertex(&name, span);
            let v = self.vertex(&target, target_span);
            if self.builder.add_directed(u, v).is_err() {
                // the only possible conflict for directed-only input is the reverse edge
                return Err(ParseError::new(ParseErrorKind::Cyclic(name), span));
            }
            return Ok(());
        }
        let v = self.vertex(&name, span);
        if self.peek().0 == Token::LBracket {
            self.next();
            loop {
                let (word, word_span) = match self.next() {
                    (Token::Name(w), s) => (w, s),
                    (tok, s) => {
                        return Err(syntax(
                            format!("expected a role attribute, found {}", tok.describe()),
                            s,
                        ))
                    }
                };
                let role = Role::from_keyword(&word).ok_or_else(|| {
                    syntax(
                        format!("unknown attribute `{word}` (expected exposure, outcome, adjusted or latent)"),
                        word_span,
                    )
                })?;
                self.assign(v, &name, role, word_span)?;
                match self.next() {
                    (Token::Comma, _) => continue,
                    (Token::RBracket, _) => break,
                    (tok, s) => return Err(syntax(format!("expected `,` or `]`, found {}", tok.describe()), s)),
                }
            }
        }
        Ok(())
    }

    fn assign(&mut self, v: Vertex, name: &str, role: Role, span: Span) -> Result<(), ParseError> {
        match self.roles.role_of(v) {
            Some(existing) if existing != role => Err(ParseError::new(
                ParseErrorKind::ConflictingRoles {
                    vertex: name.to_string(),
                    first: existing.to_string(),
                    second: role.to_string(),
                },
                span,
            )),
            _ => {
                self.roles.set_mut(role).insert(v);
                Ok(())
            }
        }
    }
}

/// Parses a `.dag` document.
pub fn parse(text: &str) -> Result<DiagramDocument, ParseError> {
    let parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        builder: GraphBuilder::new(),
        roles: RoleAssignment::default(),
        first_seen: Vec::new(),
        spans: Vec::new(),
    };
    parser.document()
}

/// Canonical text: every vertex on its own line in vertex order (with its role,
/// if any), then every edge in edge order.
pub fn serialize(doc: &DiagramDocument) -> String {
    let g = &doc.graph;
    let mut out = String::from("dag {\n");
    for v in g.vertices() {
        match doc.roles.role_of(v) {
            Some(role) => writeln!(out, "  {} [{}]", g.name(v), role),
            None => writeln!(out, "  {}", g.name(v)),
        }
        .expect("writing to a String");
    }
    for &(u, v) in g.directed_edges() {
        writeln!(out, "  {} -> {}", g.name(u), g.name(v)).expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

/// The diagrams used throughout the examples and tests.
pub mod fixtures {
    use super::{parse, DiagramDocument};

    /// Low education (LE) and diabetes (D) with family income, mother's genetic
    /// risk and mother's diabetes as covariates.
    pub const FIG1: &str = "dag { LE [exposure] D [outcome] FI MR MD  FI->LE FI->MD MR->MD MR->D MD->D LE->D }";
    /// Coffee (C) and heart disease (H), confounded by an unobserved U via smoking S.
    pub const COFFEE: &str = "dag { C [exposure] H [outcome] U [latent] S  U->C U->S S->H }";
    /// Two independent causes of hospitalisation.
    pub const HARVARD: &str = "dag { R [exposure] S [outcome] H  R->H S->H }";
    pub const CHAIN: &str = "dag { x [exposure] y [outcome] m  x->m m->y }";

    pub const ALL: [(&str, &str); 4] = [
        ("FIG1", FIG1),
        ("COFFEE", COFFEE),
        ("HARVARD", HARVARD),
        ("CHAIN", CHAIN),
    ];

    pub fn fig1() -> DiagramDocument {
        parse(FIG1).expect("fixture parses")
    }

    pub fn coffee() -> DiagramDocument {
        parse(COFFEE).expect("fixture parses")
    }

    pub fn harvard() -> DiagramDocument {
        parse(HARVARD).expect("fixture parses")
    }

    pub fn chain() -> DiagramDocument {
        parse(CHAIN).expect("fixture parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ParseErrorKind;

    #[test]
    fn minimal_document() {
        let doc = parse("dag { x [exposure] y [outcome] x -> y }").unwrap();
        assert_eq!(doc.graph.vertex_count(), 2);
        assert_eq!(doc.graph.directed_edges(), &[(0, 1)]);
        assert_eq!(doc.roles.exposure.len(), 1);
        assert!(doc.roles.outcome.contains(&1));
        assert_eq!(doc.spans.len(), 3);
    }

    #[test]
    fn fixtures_parse() {
        let fig1 = fixtures::fig1();
        assert_eq!(fig1.graph.vertex_count(), 5);
        assert_eq!(fig1.graph.directed_edges().len(), 6);
        assert_eq!(fig1.graph.names(), &["LE", "D", "FI", "MR", "MD"].map(String::from));
        let coffee = fixtures::coffee();
        assert_eq!(coffee.roles.latent.len(), 1);
    }

    #[test]
    fn self_loop_is_an_error() {
        let err = parse("dag { a -> a }").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SelfLoop("a".into()));
        assert_eq!(err.span, Span { line: 1, column: 7 });
    }

    #[test]
    fn cycles_are_rejected() {
        let err = parse("dag {\n a -> b\n b -> c\n c -> a\n}").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Cyclic(_)));
        let err = parse("dag { a -> b b -> a }").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Cyclic(_)));
    }

    #[test]
    fn conflicting_roles() {
        let err = parse("dag { a [exposure] a [outcome] }").unwrap_err();
        assert!(err.is_role_violation());
        let err = parse("dag { a [exposure, latent] }").unwrap_err();
        assert!(err.is_role_violation());
        // repeating the same role is fine
        let doc = parse("dag { a [exposure] a [exposure] b a->b a->b }").unwrap();
        assert_eq!(doc.graph.directed_edges().len(), 1);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("dag {\n  a -> \n}").unwrap_err();
        assert_eq!(err.span, Span { line: 3, column: 1 });
        let err = parse("graph { }").unwrap_err();
        assert_eq!(err.span, Span { line: 1, column: 1 });
        let err = parse("dag { a [treated] }").unwrap_err();
        assert_eq!(err.span.column, 10);
        assert!(parse("dag { a - b }").is_err());
        assert!(parse("dag { 1a }").is_err());
        assert!(parse("dag { } extra").is_err());
        assert!(parse("dag { a [exposure").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn comments_and_whitespace() {
        let doc = parse("# header\ndag { # open\n a -> b # edge\n}\n# trailing").unwrap();
        assert_eq!(doc.graph.edge_count(), 1);
    }

    #[test]
    fn serialize_empty_and_roles() {
        let empty = parse("dag { }").unwrap();
        assert_eq!(serialize(&empty), "dag {\n}\n");

        let doc = parse("dag { a [exposure] b [outcome] c [adjusted] d [latent] d->a a->b c->b }").unwrap();
        let text = serialize(&doc);
        for role in ["exposure", "outcome", "adjusted", "latent"] {
            assert_eq!(text.matches(&format!("[{role}]")).count(), 1);
        }
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn fixtures_round_trip() {
        for (_, text) in fixtures::ALL {
            let doc = parse(text).unwrap();
            assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
        }
    }
}
